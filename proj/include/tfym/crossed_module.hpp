#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tfym/lie_algebra.hpp"

namespace tfym {

enum class CheckStatus { pass, fail, skipped };
const char* status_name(CheckStatus s);

struct AxiomResult {
  std::string name;
  Rational residual;
  CheckStatus status = CheckStatus::pass;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomResult> entries;

  void add(const std::string& name, const Rational& residual);
  void skip(const std::string& name, const std::string& reason);
  bool passed() const;
  const AxiomResult* find(const std::string& name) const;
  std::vector<std::string> failures() const;
};

// (h, g; alpha, act): act(a, b, k) is the coefficient of e_k in X_a |> Y_b.
struct DifferentialCrossedModule {
  AlgebraPtr h, g;
  Matrix alpha;  // dim g x dim h
  Tensor3 act;   // (dim g, dim h, dim h)
};

AxiomReport crossed_module_report(const DifferentialCrossedModule& cm);

// l --beta--> h --alpha--> g with g-actions on g, h, l and the Peiffer lifting.
struct DifferentialTwoCrossedModule {
  std::string name;
  AlgebraPtr g, h, l;
  Matrix alpha;     // dim g x dim h
  Matrix beta;      // dim h x dim l
  Tensor3 act_g;    // (g, g, g); axioms require the adjoint
  Tensor3 act_h;    // (g, h, h)
  Tensor3 act_l;    // (g, l, l)
  Tensor3 peiffer;  // (h, h, l): {Y_a, Y_b} = sum_z peiffer(a, b, z) Z_z
  // Generalized inverses (X R X = X) used to build fake-flat witnesses.
  std::optional<Matrix> alpha_right_inverse;  // dim h x dim g
  std::optional<Matrix> beta_right_inverse;   // dim l x dim h
  // allow A^A -> 1/2 A^[,]A when g carries no matrix representation
  bool bracket_substitution = false;
};

// Throws StructuralError on any shape inconsistency.
void validate_shapes(const DifferentialTwoCrossedModule& M);

// Zero tensors/maps of the right shape; act_g set to the adjoint.
DifferentialTwoCrossedModule make_module(const std::string& name, LieAlgebra g, LieAlgebra h, LieAlgebra l);

// Action tensor of g on itself given by the bracket.
Tensor3 adjoint_tensor(const LieAlgebra& g);

// Y_a |>' Z_b = -{beta(Z_b), Y_a}, shape (h, l, l)
Tensor3 prime_action_tensor(const DifferentialTwoCrossedModule& M);

const std::vector<std::string>& axiom_names();

struct AxiomSelection {
  std::set<std::string> disabled;
  bool enabled(const std::string& name) const { return !disabled.count(name); }
};

AxiomReport axiom_report(const DifferentialTwoCrossedModule& M, const AxiomSelection& sel = {});

enum class Part { g, h, l };
Part part_of(const DifferentialTwoCrossedModule& M, const AlgebraElement& v);
AlgebraPtr algebra_of(const DifferentialTwoCrossedModule& M, Part p);

AlgebraElement peiffer(const DifferentialTwoCrossedModule& M, const AlgebraElement& y1, const AlgebraElement& y2);
AlgebraElement act(const DifferentialTwoCrossedModule& M, const AlgebraElement& x, const AlgebraElement& v);
AlgebraElement act_h_prime(const DifferentialTwoCrossedModule& M, const AlgebraElement& y, const AlgebraElement& z);
AlgebraElement alpha_apply(const DifferentialTwoCrossedModule& M, const AlgebraElement& y);
AlgebraElement beta_apply(const DifferentialTwoCrossedModule& M, const AlgebraElement& z);

// (l, h; beta, |>'). Rejects M unless axiom_report(M, sel) passes.
DifferentialCrossedModule induced_crossed_module(const DifferentialTwoCrossedModule& M,
                                                 const AxiomSelection& sel = {});
// (h, g; alpha, |>)
DifferentialCrossedModule lower_crossed_module(const DifferentialTwoCrossedModule& M);

bool peiffer_trivial(const DifferentialTwoCrossedModule& M);
bool maps_trivial(const DifferentialTwoCrossedModule& M);

}  // namespace tfym
