#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suites.hpp"
#include "tfym/instances.hpp"

using namespace tfym;

namespace {

InvariantFormTriple identity_projection(const DifferentialTwoCrossedModule& M) {
  return project_invariant(M, Matrix::identity(M.g->dim), Matrix::identity(M.h->dim), Matrix::identity(M.l->dim));
}

}  // namespace

TEST_CASE("identity Grams are invariant on su(2) instances") {
  for (const auto& M : {su2_peiffer_instance(), su2_split_instance(), su2_u1_instance()}) {
    CAPTURE(M.name);
    const auto T = InvariantFormTriple::identity(M);
    CHECK(invariance_residual(T, M).passed());
    CHECK(T.positive_definite());
    CHECK(induced_map_report(M, T).passed());
  }
}

TEST_CASE("projection lands on invariant forms") {
  auto M = u2_crossed_instance();
  Matrix seed = Matrix::identity(4);
  seed(0, 1) = seed(1, 0) = Rational(1, 3);
  seed(3, 3) = 5;
  const auto T = project_invariant(M, seed, seed, Matrix::identity(0));
  CHECK(invariance_residual(T, M).passed());
  CHECK(T.positive_definite());
  // the su(2) block is averaged to a multiple of the identity, the centre keeps its weight
  CHECK(T.gram_g(0, 1) == 0);
  CHECK(T.gram_g(0, 0) == T.gram_g(1, 1));
  CHECK(T.gram_g(3, 3) == 5);
}

TEST_CASE("aff(1) has no usable invariant form") {
  const auto M = aff1_instance();
  CHECK_THROWS_AS(identity_projection(M), ConstructionError);
  const auto cfg = suites::shipped("aff1");
  CHECK_FALSE(cfg.triple.has_value());
  CHECK_FALSE(cfg.triple_error.empty());
}

TEST_CASE("Gram validation") {
  Matrix asym = Matrix::identity(2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(InvariantFormTriple::make(asym, Matrix::identity(1), Matrix::identity(1)), StructuralError);
  Matrix singular(2, 2);
  CHECK_THROWS_AS(InvariantFormTriple::make(singular, Matrix::identity(1), Matrix::identity(1)), StructuralError);
  const auto M = su2_peiffer_instance();
  Matrix indefinite = Matrix::identity(3);
  indefinite(2, 2) = -1;
  CHECK_THROWS_AS(project_invariant(M, indefinite, Matrix::identity(3), Matrix::identity(3)), PreconditionError);
}

TEST_CASE("a non-invariant Gram is reported") {
  const auto M = su2_peiffer_instance();
  Matrix g = Matrix::identity(3);
  g(0, 0) = 2;
  const auto T = InvariantFormTriple::make(g, Matrix::identity(3), Matrix::identity(3));
  CHECK_FALSE(invariance_residual(T, M).passed());
}

TEST_CASE("sigma is the bracket for identity Grams and adjoint actions") {
  const auto M = su2_peiffer_instance();
  const auto T = InvariantFormTriple::identity(M);
  const auto y0 = basis_element(M.h, 0), y1 = basis_element(M.h, 1);
  const auto s = sigma(M, T, y0, y1);
  CHECK(s.algebra == M.g);
  CHECK(s.coords == Vec{0, 0, 1});
  CHECK(kappa(M, T, basis_element(M.l, 1), basis_element(M.l, 2)).coords == Vec{1, 0, 0});
  // <[e0, e1], e2> = 1 = -<e1, eta1(e2, e0)>
  const auto e = eta(M, T, 1, basis_element(M.l, 2), y0);
  CHECK(e.algebra == M.h);
  CHECK(e.coords == Vec{0, -1, 0});
  CHECK(beta_star(M, T, y1).coords == Vec{0, 1, 0});
  CHECK(alpha_star(M, T, basis_element(M.g, 0)).coords == Vec{0, 0, 0});
  CHECK_THROWS_AS(eta(M, T, 3, basis_element(M.l, 0), y0), PreconditionError);
}

TEST_CASE("a trivial lifting gives vanishing eta maps") {
  const auto M = abelian_chain_instance();
  const auto T = identity_projection(M);
  CHECK(eta_tensor(M, T, 1).is_zero());
  CHECK(eta_tensor(M, T, 2).is_zero());
  CHECK(sigma_tensor(M, T).is_zero());
  // alpha* is the transpose of alpha for identity Grams
  CHECK(alpha_star_matrix(M, T) == transpose(M.alpha));
  CHECK(beta_star_matrix(M, T) == transpose(M.beta));
}

TEST_CASE("basis-sum oracle agrees with the induced maps on shipped instances") {
  long n = 0;
  for (const auto& cfg : suites::validated_configs()) {
    if (!cfg.triple) continue;
    CAPTURE(cfg.name);
    const auto r = suites::induced_relations(cfg.module, *cfg.triple);
    CHECK(r.failures.empty());
    for (const auto& f : r.failures) MESSAGE(f);
    ++n;
  }
  CHECK(n >= 9);
}

TEST_CASE("EB does not change when eta1 and eta2 trade places") {
  const auto r = suites::induced_suite(1);
  CHECK(r.ok());
  for (const auto& f : r.failures) MESSAGE(f);
}
