#include "tfym/instances.hpp"

namespace tfym {

namespace {

Tensor3 adjoint_on(const LieAlgebra& g, int n, int offset) {
  // g acting by its bracket on a copy of g placed at coordinates offset..offset+dim
  Tensor3 t(g.dim, n, n);
  for (int a = 0; a < g.dim; ++a)
    for (int b = 0; b < g.dim; ++b)
      for (int k = 0; k < g.dim; ++k) t(a, offset + b, offset + k) = g.structure(a, b, k);
  return t;
}

}  // namespace

DifferentialTwoCrossedModule abelian_chain_instance() {
  auto M = make_module("abelian_chain", abelian_algebra("g", 1), abelian_algebra("h", 2), abelian_algebra("l", 1));
  M.beta(0, 0) = 1;
  M.beta(1, 0) = 1;
  M.alpha(0, 0) = 1;
  M.alpha(0, 1) = -1;
  M.alpha_right_inverse = Matrix(2, 1);
  (*M.alpha_right_inverse)(0, 0) = 1;
  M.beta_right_inverse = Matrix(1, 2);
  (*M.beta_right_inverse)(0, 0) = 1;
  M.bracket_substitution = true;
  return M;
}

DifferentialTwoCrossedModule u2_crossed_instance() {
  auto M = make_module("u2_crossed", u2_algebra("g"), u2_algebra("h"), abelian_algebra("l", 0));
  M.alpha = Matrix::identity(4);
  M.act_h = adjoint_on(*M.g, 4, 0);
  M.alpha_right_inverse = Matrix::identity(4);
  return M;
}

DifferentialTwoCrossedModule su2_u1_instance() {
  return make_module("su2_u1", su2_algebra("g"), abelian_algebra("h", 0), abelian_algebra("l", 1));
}

DifferentialTwoCrossedModule su2_peiffer_instance() {
  auto M = make_module("su2_peiffer", su2_algebra("g"), su2_algebra("h"), su2_algebra("l"));
  M.beta = Matrix::identity(3);
  M.act_h = adjoint_on(*M.g, 3, 0);
  M.act_l = adjoint_on(*M.g, 3, 0);
  M.peiffer = M.h->structure;
  M.beta_right_inverse = Matrix::identity(3);
  return M;
}

DifferentialTwoCrossedModule su2_split_instance() {
  LieAlgebra s = su2_algebra("su2");
  auto M = make_module("su2_split", su2_algebra("g"), direct_sum("h", s, s), su2_algebra("l"));
  for (int i = 0; i < 3; ++i) {
    M.alpha(i, i) = 1;
    M.beta(3 + i, i) = 1;
  }
  Tensor3 first = adjoint_on(*M.g, 6, 0), second = adjoint_on(*M.g, 6, 3);
  for (size_t i = 0; i < first.v.size(); ++i) M.act_h.v[i] = first.v[i] + second.v[i];
  M.act_l = adjoint_on(*M.g, 3, 0);
  if (!solve_peiffer_from_boundary(M)) throw ConstructionError("su2_split: boundary axiom unsolvable");
  Matrix ra(6, 3), rb(3, 6);
  for (int i = 0; i < 3; ++i) {
    ra(i, i) = 1;
    rb(i, 3 + i) = 1;
  }
  M.alpha_right_inverse = ra;
  M.beta_right_inverse = rb;
  return M;
}

DifferentialTwoCrossedModule aff1_instance() {
  auto M = make_module("aff1", aff1_algebra("g"), abelian_algebra("h", 0), abelian_algebra("l", 0));
  M.bracket_substitution = true;
  return M;
}

DifferentialTwoCrossedModule su2_only_instance() {
  return make_module("su2_only", su2_algebra("g"), abelian_algebra("h", 0), abelian_algebra("l", 0));
}

DifferentialTwoCrossedModule u1_g_instance() {
  auto M = make_module("u1_g", abelian_algebra("g", 1), abelian_algebra("h", 0), abelian_algebra("l", 0));
  M.bracket_substitution = true;
  return M;
}

DifferentialTwoCrossedModule u1_h_instance() {
  auto M = make_module("u1_h", abelian_algebra("g", 0), abelian_algebra("h", 1), abelian_algebra("l", 0));
  M.bracket_substitution = true;
  return M;
}

DifferentialTwoCrossedModule u1_l_instance() {
  auto M = make_module("u1_l", abelian_algebra("g", 0), abelian_algebra("h", 0), abelian_algebra("l", 1));
  M.bracket_substitution = true;
  return M;
}

std::vector<PeifferCandidate> search_su2_peiffer(const std::vector<Rational>& scales) {
  std::vector<PeifferCandidate> hits;
  const auto base = su2_peiffer_instance();
  for (const auto& c : scales)
    for (const auto& lam : scales) {
      auto M = base;
      M.beta = Matrix::identity(3);
      for (auto& q : M.beta.v) q *= c;
      for (auto& q : M.peiffer.v) q *= lam;
      if (axiom_report(M).passed()) hits.push_back({c, lam});
    }
  return hits;
}

bool solve_peiffer_from_boundary(DifferentialTwoCrossedModule& M) {
  const int nh = M.h->dim, nl = M.l->dim;
  M.peiffer = Tensor3(nh, nh, nl);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      Vec ya(nh), yb(nh);
      ya[a] = 1;
      yb[b] = 1;
      Vec rhs = contract(M.h->structure, ya, yb);
      Vec push = contract(M.act_h, M.alpha * ya, yb);
      for (int k = 0; k < nh; ++k) rhs[k] -= push[k];
      Vec z;
      if (!solve(M.beta, rhs, z)) return false;
      for (int k = 0; k < nl; ++k) M.peiffer(a, b, k) = z[k];
    }
  return true;
}

}  // namespace tfym
