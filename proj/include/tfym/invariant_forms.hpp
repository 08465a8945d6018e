#pragma once

#include "tfym/crossed_module.hpp"

namespace tfym {

struct InvariantFormTriple {
  Matrix gram_g, gram_h, gram_l;
  Matrix inv_g, inv_h, inv_l;

  // Validates symmetry and invertibility, precomputes inverses.
  static InvariantFormTriple make(Matrix g, Matrix h, Matrix l);
  static InvariantFormTriple identity(const DifferentialTwoCrossedModule& M);
  const Matrix& gram(Part p) const;
  bool positive_definite() const;
};

// Residuals of g-invariance of all three forms, bracket-invariance of the h and l
// forms, and (only when the lifting is trivial) invariance of the l form under |>'.
AxiomReport invariance_residual(const InvariantFormTriple& T, const DifferentialTwoCrossedModule& M);

// Orthogonal (Frobenius) projection of each seed onto the invariant symmetric forms.
// Throws ConstructionError when a projection is not positive definite.
InvariantFormTriple project_invariant(const DifferentialTwoCrossedModule& M, const Matrix& seed_g,
                                      const Matrix& seed_h, const Matrix& seed_l);

// Tensors of the induced bilinear maps:
//   sigma(a, b, k): coefficient of X_k in sigma(Y_a, Y_b)
//   kappa(a, b, k): coefficient of X_k in kappa(Z_a, Z_b)
//   eta_i(b, a, k): coefficient of Y_k in eta_i(Z_b, Y_a)
Tensor3 sigma_tensor(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T);
Tensor3 kappa_tensor(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T);
Tensor3 eta_tensor(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, int i);
Matrix alpha_star_matrix(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T);
Matrix beta_star_matrix(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T);

AlgebraElement sigma(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, const AlgebraElement& y,
                     const AlgebraElement& y2);
AlgebraElement kappa(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, const AlgebraElement& z,
                     const AlgebraElement& z2);
AlgebraElement eta(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, int i,
                   const AlgebraElement& z, const AlgebraElement& y);
AlgebraElement alpha_star(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                          const AlgebraElement& x);
AlgebraElement beta_star(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                         const AlgebraElement& y);

Rational form_value(const Matrix& gram, const Vec& a, const Vec& b);

// Back-substitution of every defining relation plus sigma/kappa antisymmetry.
AxiomReport induced_map_report(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T);

}  // namespace tfym
