#pragma once

#include <string>
#include <vector>

#include "tfym/crossed_module.hpp"

namespace tfym {

// Finite group on {0..n-1} given by its multiplication table.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Validates closure, associativity, identity and inverses (ConfigError otherwise).
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<int>>& table);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  bool is_abelian() const;
  // Small generating set, greedily chosen in index order.
  const std::vector<int>& generators() const { return gens_; }
  std::vector<std::vector<int>> table() const;

 private:
  std::string name_;
  int n_ = 0, e_ = 0;
  std::vector<int> table_, inverse_, gens_;
};

FiniteGroup trivial_group(const std::string& name);
FiniteGroup cyclic_group(const std::string& name, int n);
// permutations of {0,1,2} in lexicographic order, (a b)(x) = a(b(x)); element 0 is the identity
FiniteGroup symmetric_group3(const std::string& name);

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& f);
// All automorphisms of G, each as an image table.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& G);
// All homomorphisms A -> B, each as an image table.
std::vector<std::vector<int>> homomorphisms(const FiniteGroup& A, const FiniteGroup& B);

// L --beta--> H --alpha--> G with G acting on H and L (on G by conjugation) and a lifting.
struct FiniteTwoCrossedModule {
  std::string name;
  FiniteGroup G, H, L;
  std::vector<int> alpha;    // H -> G
  std::vector<int> beta;     // L -> H
  std::vector<int> act_h;    // [g * |H| + h] = g |> h
  std::vector<int> act_l;    // [g * |L| + l] = g |> l
  std::vector<int> peiffer;  // [h1 * |H| + h2] = {h1, h2}

  int a(int h) const { return alpha[h]; }
  int b(int l) const { return beta[l]; }
  int on_h(int g, int h) const { return act_h[static_cast<size_t>(g) * H.order() + h]; }
  int on_l(int g, int l) const { return act_l[static_cast<size_t>(g) * L.order() + l]; }
  int lift(int h1, int h2) const { return peiffer[static_cast<size_t>(h1) * H.order() + h2]; }
  // h |>' l = l {beta(l)^-1, h}
  int prime(int h, int l) const { return L.mul(l, lift(H.inv(b(l)), h)); }
};

// Throws ConfigError on table shapes or out-of-range entries.
void validate_tables(const FiniteTwoCrossedModule& M);

// Residual = number of violating tuples. Includes the crossed-module conditions
// on (H, G; alpha, |>) and on the induced (L, H; beta, |>').
AxiomReport finite_axiom_report(const FiniteTwoCrossedModule& M);

FiniteTwoCrossedModule trivial_finite_instance();
// L = Z2 -> H = Z4 -> G = Z2 by doubling and reduction mod 2, trivial actions and lifting.
FiniteTwoCrossedModule cyclic_chain_instance();

struct FiniteSearchResult {
  FiniteTwoCrossedModule module;
  long candidates = 0;  // tuples examined
  long valid = 0;       // tuples passing every axiom
};

// Exhaustive search over homomorphisms alpha, beta and actions G -> Aut(H), G -> Aut(L)
// with trivial lifting; returns the first valid tuple whose alpha, beta and H-action are
// all nontrivial. Throws ConstructionError if none exists.
FiniteSearchResult search_finite_instance(const FiniteGroup& G, const std::vector<FiniteGroup>& Hs,
                                          const FiniteGroup& L);

// G = S3, found by search_finite_instance over H in {Z2, Z3, Z6, S3}, L = Z2.
FiniteTwoCrossedModule s3_search_instance();

}  // namespace tfym
