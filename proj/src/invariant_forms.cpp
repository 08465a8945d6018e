#include "tfym/invariant_forms.hpp"

#include <functional>

namespace tfym {

InvariantFormTriple InvariantFormTriple::make(Matrix g, Matrix h, Matrix l) {
  InvariantFormTriple T;
  for (const Matrix* m : {&g, &h, &l})
    if (!is_symmetric(*m)) throw StructuralError("Gram matrix is not symmetric");
  T.inv_g = inverse(g);
  T.inv_h = inverse(h);
  T.inv_l = inverse(l);
  T.gram_g = std::move(g);
  T.gram_h = std::move(h);
  T.gram_l = std::move(l);
  return T;
}

InvariantFormTriple InvariantFormTriple::identity(const DifferentialTwoCrossedModule& M) {
  return make(Matrix::identity(M.g->dim), Matrix::identity(M.h->dim), Matrix::identity(M.l->dim));
}

const Matrix& InvariantFormTriple::gram(Part p) const {
  switch (p) {
    case Part::g: return gram_g;
    case Part::h: return gram_h;
    case Part::l: return gram_l;
  }
  return gram_g;
}

bool InvariantFormTriple::positive_definite() const {
  return is_positive_definite(gram_g) && is_positive_definite(gram_h) && is_positive_definite(gram_l);
}

Rational form_value(const Matrix& G, const Vec& a, const Vec& b) {
  Rational s = 0;
  for (int i = 0; i < G.rows; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < G.cols; ++j)
      if (sgn(b[j]) != 0) s += a[i] * G(i, j) * b[j];
  }
  return s;
}

namespace {

// Operators acting on an n-dimensional algebra, one n x n matrix per generator:
// op(k, b) is the coefficient of e_k in gen |> e_b.
std::vector<Matrix> operators_from(const Tensor3& t) {
  std::vector<Matrix> ops;
  for (int a = 0; a < t.n0; ++a) {
    Matrix m(t.n2, t.n1);
    for (int b = 0; b < t.n1; ++b)
      for (int k = 0; k < t.n2; ++k) m(k, b) = t(a, b, k);
    ops.push_back(m);
  }
  return ops;
}

Rational invariance_of(const Matrix& G, const std::vector<Matrix>& ops) {
  Rational worst = 0;
  for (const Matrix& R : ops) {
    // (R^T G + G R)_{ij} = <R e_i, e_j> + <e_i, R e_j>
    Matrix m = transpose(R) * G + G * R;
    Rational r = max_abs(m);
    if (r > worst) worst = r;
  }
  return worst;
}

std::vector<Matrix> h_ops(const DifferentialTwoCrossedModule& M) {
  auto ops = operators_from(M.act_h);
  for (auto& m : operators_from(M.h->structure)) ops.push_back(m);
  return ops;
}

std::vector<Matrix> l_ops(const DifferentialTwoCrossedModule& M) {
  auto ops = operators_from(M.act_l);
  for (auto& m : operators_from(M.l->structure)) ops.push_back(m);
  return ops;
}

Matrix project_one(const Matrix& seed, const std::vector<Matrix>& ops, const std::string& which) {
  const int n = seed.rows;
  if (seed.cols != n) throw StructuralError(which + " seed is not square");
  if (n == 0) return seed;
  if (!is_positive_definite(seed)) throw PreconditionError(which + " seed is not symmetric positive definite");
  const int nn = n * n;
  auto var = [n](int i, int j) { return i * n + j; };
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec r(nn);
      r[var(i, j)] = 1;
      r[var(j, i)] = -1;
      rows.push_back(r);
    }
  for (const Matrix& R : ops)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec r(nn);
        for (int k = 0; k < n; ++k) {
          r[var(k, j)] += R(k, i);
          r[var(i, k)] += R(k, j);
        }
        rows.push_back(r);
      }
  Matrix C(static_cast<int>(rows.size()), nn);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nn; ++j) C(static_cast<int>(i), j) = rows[i][j];
  Matrix N = nullspace(C);
  if (N.cols == 0) throw ConstructionError(which + ": the only invariant symmetric form is zero");
  Vec s(seed.v.begin(), seed.v.end());
  Matrix Nt = transpose(N);
  Vec coeff = inverse(Nt * N) * (Nt * s);
  Vec p = N * coeff;
  Matrix out(n, n);
  out.v = p;
  if (rank(out) < n) throw ConstructionError(which + ": projected form is degenerate");
  if (!is_positive_definite(out)) throw ConstructionError(which + ": projected form is not positive definite");
  return out;
}

}  // namespace

AxiomReport invariance_residual(const InvariantFormTriple& T, const DifferentialTwoCrossedModule& M) {
  if (T.gram_g.rows != M.g->dim || T.gram_h.rows != M.h->dim || T.gram_l.rows != M.l->dim)
    throw StructuralError("form triple dimensions do not match " + M.name);
  AxiomReport rep;
  rep.add("g_invariance", invariance_of(T.gram_g, operators_from(M.g->structure)));
  rep.add("h_g_invariance", invariance_of(T.gram_h, operators_from(M.act_h)));
  rep.add("l_g_invariance", invariance_of(T.gram_l, operators_from(M.act_l)));
  rep.add("h_bracket_invariance", invariance_of(T.gram_h, operators_from(M.h->structure)));
  rep.add("l_bracket_invariance", invariance_of(T.gram_l, operators_from(M.l->structure)));
  if (peiffer_trivial(M))
    rep.add("l_h_prime_invariance", invariance_of(T.gram_l, operators_from(prime_action_tensor(M))));
  else
    rep.skip("l_h_prime_invariance", "only asserted for a trivial lifting");
  return rep;
}

InvariantFormTriple project_invariant(const DifferentialTwoCrossedModule& M, const Matrix& seed_g,
                                      const Matrix& seed_h, const Matrix& seed_l) {
  if (seed_g.rows != M.g->dim || seed_h.rows != M.h->dim || seed_l.rows != M.l->dim)
    throw StructuralError("seed dimensions do not match " + M.name);
  Matrix g = project_one(seed_g, operators_from(M.g->structure), "g");
  Matrix h = project_one(seed_h, h_ops(M), "h");
  Matrix l = project_one(seed_l, l_ops(M), "l");
  return InvariantFormTriple::make(std::move(g), std::move(h), std::move(l));
}

Tensor3 sigma_tensor(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T) {
  const int ng = M.g->dim, nh = M.h->dim;
  Tensor3 s(nh, nh, ng);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      Vec r(ng);
      for (int c = 0; c < ng; ++c)
        for (int k = 0; k < nh; ++k) r[c] -= M.act_h(c, b, k) * T.gram_h(a, k);
      Vec x = T.inv_g * r;
      for (int k = 0; k < ng; ++k) s(a, b, k) = x[k];
    }
  return s;
}

Tensor3 kappa_tensor(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T) {
  const int ng = M.g->dim, nl = M.l->dim;
  Tensor3 s(nl, nl, ng);
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < nl; ++b) {
      Vec r(ng);
      for (int c = 0; c < ng; ++c)
        for (int k = 0; k < nl; ++k) r[c] -= M.act_l(c, b, k) * T.gram_l(a, k);
      Vec x = T.inv_g * r;
      for (int k = 0; k < ng; ++k) s(a, b, k) = x[k];
    }
  return s;
}

Tensor3 eta_tensor(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, int i) {
  if (i != 1 && i != 2) throw PreconditionError("eta index must be 1 or 2");
  const int nh = M.h->dim, nl = M.l->dim;
  Tensor3 e(nl, nh, nh);
  for (int b = 0; b < nl; ++b)
    for (int a = 0; a < nh; ++a) {
      // <{Y_a, Y_c}, Z_b> = -<Y_c, eta_1(Z_b, Y_a)>,  <{Y_c, Y_a}, Z_b> = -<Y_c, eta_2(Z_b, Y_a)>
      Vec r(nh);
      for (int c = 0; c < nh; ++c)
        for (int k = 0; k < nl; ++k) {
          const Rational& p = (i == 1) ? M.peiffer(a, c, k) : M.peiffer(c, a, k);
          if (sgn(p) != 0) r[c] -= p * T.gram_l(k, b);
        }
      Vec y = T.inv_h * r;
      for (int k = 0; k < nh; ++k) e(b, a, k) = y[k];
    }
  return e;
}

Matrix alpha_star_matrix(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T) {
  return T.inv_h * transpose(M.alpha) * T.gram_g;
}

Matrix beta_star_matrix(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T) {
  return T.inv_l * transpose(M.beta) * T.gram_h;
}

namespace {

void expect_in(const DifferentialTwoCrossedModule& M, const AlgebraElement& v, Part p, const char* what) {
  if (v.algebra != algebra_of(M, p)) throw StructuralError(std::string(what) + ": argument in the wrong algebra");
}

}  // namespace

AlgebraElement sigma(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, const AlgebraElement& y,
                     const AlgebraElement& y2) {
  expect_in(M, y, Part::h, "sigma");
  expect_in(M, y2, Part::h, "sigma");
  return AlgebraElement{M.g, contract(sigma_tensor(M, T), y.coords, y2.coords)};
}

AlgebraElement kappa(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, const AlgebraElement& z,
                     const AlgebraElement& z2) {
  expect_in(M, z, Part::l, "kappa");
  expect_in(M, z2, Part::l, "kappa");
  return AlgebraElement{M.g, contract(kappa_tensor(M, T), z.coords, z2.coords)};
}

AlgebraElement eta(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T, int i,
                   const AlgebraElement& z, const AlgebraElement& y) {
  expect_in(M, z, Part::l, "eta");
  expect_in(M, y, Part::h, "eta");
  return AlgebraElement{M.h, contract(eta_tensor(M, T, i), z.coords, y.coords)};
}

AlgebraElement alpha_star(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                          const AlgebraElement& x) {
  expect_in(M, x, Part::g, "alpha_star");
  return AlgebraElement{M.h, alpha_star_matrix(M, T) * x.coords};
}

AlgebraElement beta_star(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                         const AlgebraElement& y) {
  expect_in(M, y, Part::h, "beta_star");
  return AlgebraElement{M.l, beta_star_matrix(M, T) * y.coords};
}

AxiomReport induced_map_report(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T) {
  const int ng = M.g->dim, nh = M.h->dim, nl = M.l->dim;
  auto e = [](int n, int i) {
    Vec v(n);
    v[i] = 1;
    return v;
  };
  auto worst_over = [](int n0, int n1, int n2, const std::function<Rational(int, int, int)>& f) {
    Rational w = 0;
    for (int a = 0; a < n0; ++a)
      for (int b = 0; b < n1; ++b)
        for (int c = 0; c < n2; ++c) w = std::max(w, abs(f(a, b, c)));
    return w;
  };
  const Tensor3 S = sigma_tensor(M, T), K = kappa_tensor(M, T), E1 = eta_tensor(M, T, 1), E2 = eta_tensor(M, T, 2);
  const Matrix As = alpha_star_matrix(M, T), Bs = beta_star_matrix(M, T);
  auto col = [](const Tensor3& t, int a, int b) {
    Vec v(t.n2);
    for (int k = 0; k < t.n2; ++k) v[k] = t(a, b, k);
    return v;
  };
  AxiomReport rep;
  rep.add("sigma_definition", worst_over(nh, nh, ng, [&](int a, int b, int c) -> Rational {
            return form_value(T.gram_g, col(S, a, b), e(ng, c)) +
                   form_value(T.gram_h, e(nh, a), contract(M.act_h, e(ng, c), e(nh, b)));
          }));
  rep.add("kappa_definition", worst_over(nl, nl, ng, [&](int a, int b, int c) -> Rational {
            return form_value(T.gram_g, col(K, a, b), e(ng, c)) +
                   form_value(T.gram_l, e(nl, a), contract(M.act_l, e(ng, c), e(nl, b)));
          }));
  rep.add("eta1_definition", worst_over(nl, nh, nh, [&](int b, int a, int c) -> Rational {
            return form_value(T.gram_l, contract(M.peiffer, e(nh, a), e(nh, c)), e(nl, b)) +
                   form_value(T.gram_h, e(nh, c), col(E1, b, a));
          }));
  rep.add("eta2_definition", worst_over(nl, nh, nh, [&](int b, int a, int c) -> Rational {
            return form_value(T.gram_l, contract(M.peiffer, e(nh, c), e(nh, a)), e(nl, b)) +
                   form_value(T.gram_h, e(nh, c), col(E2, b, a));
          }));
  rep.add("alpha_star_adjoint", worst_over(nh, ng, 1, [&](int a, int c, int) -> Rational {
            return form_value(T.gram_h, e(nh, a), As * e(ng, c)) - form_value(T.gram_g, M.alpha * e(nh, a), e(ng, c));
          }));
  rep.add("beta_star_adjoint", worst_over(nl, nh, 1, [&](int a, int c, int) -> Rational {
            return form_value(T.gram_l, e(nl, a), Bs * e(nh, c)) - form_value(T.gram_h, M.beta * e(nl, a), e(nh, c));
          }));
  rep.add("sigma_antisymmetry", worst_over(nh, nh, ng, [&](int a, int b, int k) -> Rational { return S(a, b, k) + S(b, a, k); }));
  rep.add("kappa_antisymmetry", worst_over(nl, nl, ng, [&](int a, int b, int k) -> Rational { return K(a, b, k) + K(b, a, k); }));
  rep.add("h_pairing_antisymmetry", worst_over(ng, nh, nh, [&](int c, int a, int b) -> Rational {
            return form_value(T.gram_h, e(nh, a), contract(M.act_h, e(ng, c), e(nh, b))) +
                   form_value(T.gram_h, contract(M.act_h, e(ng, c), e(nh, a)), e(nh, b));
          }));
  rep.add("l_pairing_antisymmetry", worst_over(ng, nl, nl, [&](int c, int a, int b) -> Rational {
            return form_value(T.gram_l, e(nl, a), contract(M.act_l, e(ng, c), e(nl, b))) +
                   form_value(T.gram_l, contract(M.act_l, e(ng, c), e(nl, a)), e(nl, b));
          }));
  return rep;
}

}  // namespace tfym
