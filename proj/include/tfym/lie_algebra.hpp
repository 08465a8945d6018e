#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfym/linalg.hpp"

namespace tfym {

// Dense rank-3 array t[a][b][k] with shape (n0, n1, n2).
struct Tensor3 {
  int n0 = 0, n1 = 0, n2 = 0;
  std::vector<Rational> v;

  Tensor3() = default;
  Tensor3(int a, int b, int c) : n0(a), n1(b), n2(c), v(static_cast<size_t>(a) * b * c) {}

  Rational& operator()(int a, int b, int k) { return v[(static_cast<size_t>(a) * n1 + b) * n2 + k]; }
  const Rational& operator()(int a, int b, int k) const {
    return v[(static_cast<size_t>(a) * n1 + b) * n2 + k];
  }
  bool is_zero() const;
  bool operator==(const Tensor3& o) const = default;
};

// out_k = sum_{a,b} t[a][b][k] x_a y_b
template <class T>
std::vector<T> contract(const Tensor3& t, const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<T> out(t.n2, T(0));
  for (int a = 0; a < t.n0; ++a) {
    if (Field<T>::is_zero(x[a])) continue;
    for (int b = 0; b < t.n1; ++b) {
      if (Field<T>::is_zero(y[b])) continue;
      T xy = x[a] * y[b];
      for (int k = 0; k < t.n2; ++k) {
        const Rational& c = t(a, b, k);
        if (sgn(c) != 0) out[k] += Field<T>::from(c) * xy;
      }
    }
  }
  return out;
}

// Faithful associative matrix representation X_a -> mats[a] (n x n).
struct MatrixRep {
  int n = 0;
  std::vector<Matrix> mats;
};

struct LieAlgebra {
  std::string name;
  int dim = 0;
  Tensor3 structure;  // [e_a, e_b] = sum_k structure(a,b,k) e_k
  std::optional<MatrixRep> rep;

  LieAlgebra() = default;
  LieAlgebra(std::string n, int d) : name(std::move(n)), dim(d), structure(d, d, d) {}
  bool is_abelian() const { return structure.is_zero(); }
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct AlgebraElement {
  AlgebraPtr algebra;
  Vec coords;
};

AlgebraElement make_element(AlgebraPtr alg, Vec coords);
AlgebraElement basis_element(AlgebraPtr alg, int i);
AlgebraElement zero_element(AlgebraPtr alg);

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);
std::vector<double> bracket_float(const LieAlgebra& L, const std::vector<double>& a,
                                  const std::vector<double>& b);

// max over basis triples of the Jacobi cyclic sum's largest component
Rational jacobi_residual(const LieAlgebra& L);
Rational antisymmetry_residual(const LieAlgebra& L);
// max over pairs of |rep([e_a,e_b]) - [rep(e_a), rep(e_b)]| entries; 0 if no rep
Rational representation_residual(const LieAlgebra& L);

AlgebraElement random_element(AlgebraPtr alg, std::uint64_t seed, int bound);

// Builtin algebras. Coordinates are chosen so every constant is rational.
LieAlgebra abelian_algebra(const std::string& name, int dim);
// [e_a, e_b] = eps_abc e_c, with the real 3x3 rotation-generator representation
LieAlgebra su2_algebra(const std::string& name);
// u(2) = su(2) + u(1) in basis -i sigma_a / 2, i/2 * 1, represented by real 4x4 matrices
LieAlgebra u2_algebra(const std::string& name);
// [e_0, e_1] = e_1: admits no nondegenerate invariant symmetric form
LieAlgebra aff1_algebra(const std::string& name);
LieAlgebra direct_sum(const std::string& name, const LieAlgebra& a, const LieAlgebra& b);

}  // namespace tfym
