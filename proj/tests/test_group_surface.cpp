#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suites.hpp"

using namespace tfym;

TEST_CASE("finite groups from tables") {
  const auto z4 = cyclic_group("Z4", 4);
  CHECK(z4.mul(1, 3) == 0);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.is_abelian());
  const auto s3 = symmetric_group3("S3");
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK_FALSE(s3.is_abelian());
  CHECK(FiniteGroup::from_table("copy", s3.table()).table() == s3.table());

  CHECK_THROWS_AS(FiniteGroup::from_table("no_inverse", {{0, 1}, {1, 1}}), ConfigError);
  CHECK_THROWS_AS(FiniteGroup::from_table("open", {{0, 2}, {1, 0}}), ConfigError);
  CHECK_THROWS_AS(FiniteGroup::from_table("ragged", {{0, 1}, {1}}), ConfigError);
}

TEST_CASE("homomorphism enumeration") {
  const auto z2 = cyclic_group("Z2", 2), z4 = cyclic_group("Z4", 4);
  CHECK(homomorphisms(z2, z4).size() == 2);
  CHECK(homomorphisms(z4, z2).size() == 2);
  CHECK(automorphisms(symmetric_group3("S3")).size() == 6);
  CHECK(automorphisms(z4).size() == 2);
  CHECK(is_homomorphism(z4, z2, {0, 1, 0, 1}));
  CHECK_FALSE(is_homomorphism(z4, z2, {0, 0, 0, 1}));
}

TEST_CASE("finite instances satisfy the axioms") {
  for (const auto& M : {trivial_finite_instance(), cyclic_chain_instance(), s3_search_instance()}) {
    CAPTURE(M.name);
    CHECK(finite_axiom_report(M).passed());
  }
  const auto s3 = s3_search_instance();
  CHECK(s3.G.order() == 6);
  bool nontrivial_alpha = false, nontrivial_beta = false;
  for (int h = 0; h < s3.H.order(); ++h) nontrivial_alpha |= s3.a(h) != s3.G.identity();
  for (int l = 0; l < s3.L.order(); ++l) nontrivial_beta |= s3.b(l) != s3.H.identity();
  CHECK(nontrivial_alpha);
  CHECK(nontrivial_beta);
}

TEST_CASE("finite axioms reject a non-homomorphic boundary") {
  auto M = cyclic_chain_instance();
  M.alpha = {0, 0, 0, 1};
  CHECK_FALSE(finite_axiom_report(M).passed());
  auto N = cyclic_chain_instance();
  N.beta = {0, 1};  // alpha(beta(1)) = 1 is not the identity
  CHECK_FALSE(finite_axiom_report(N).passed());
  auto P = cyclic_chain_instance();
  P.act_h[1 * 4 + 1] = 7;
  CHECK_THROWS_AS(validate_tables(P), ConfigError);
}

TEST_CASE("square compositions on the cyclic chain") {
  const auto M = cyclic_chain_instance();
  const Square a{0, 1, 1}, b{1, 0, 1};
  REQUIRE(square_valid(M, a));
  REQUIRE(square_valid(M, b));
  CHECK_FALSE(square_valid(M, Square{0, 0, 1}));
  CHECK(square_compose_h(M, a, b) == Square{0, 0, 2});
  CHECK_THROWS_AS(square_compose_h(M, a, a), CompositionError);
  CHECK(square_compose_v(M, a, a) == Square{0, 0, 2});
  CHECK(square_compose_h(M, a, square_inverse_h(M, a)) == square_identity_h(M, 0));
  CHECK(square_compose_v(M, a, square_inverse_v(M, a)) == square_identity_v(M));
}

TEST_CASE("cube compositions on the cyclic chain") {
  const auto M = cyclic_chain_instance();
  // h1 = 1, l = 1 gives h2 = beta(1) h1 = 3
  const Cube c{0, 1, 0, 1, 1, 3, 1};
  REQUIRE(cube_valid(M, c));
  CHECK_FALSE(cube_valid(M, Cube{0, 1, 0, 1, 1, 1, 1}));
  const Cube ci = cube_inverse_h(M, c);
  CHECK(cube_valid(M, ci));
  CHECK(cube_compose_h(M, c, ci) == cube_identity_h(M, 0, 1, 1));
  CHECK_THROWS_AS(cube_compose_h(M, c, c), CompositionError);
  CHECK_THROWS_AS(cube_compose_v(M, c, c), CompositionError);
  const Cube cv = cube_inverse_v(M, c);
  CHECK(cube_valid(M, cv));
  CHECK(cube_compose_v(M, c, cv) == cube_identity_v(M, 0, 0));
}

TEST_CASE("exhaustive surface report") {
  for (const auto& M : {trivial_finite_instance(), cyclic_chain_instance(), s3_search_instance()}) {
    CAPTURE(M.name);
    SurfaceCounts n;
    const AxiomReport rep = group_surface_report(M, &n);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.residual == 0);
    }
    CHECK(n.square_pairs_v == static_cast<long>(all_squares(M).size() * all_squares(M).size()));
    CHECK(n.cube_pairs_h > 0);
    CHECK(n.cube_pairs_v > 0);
    const auto r = suites::surface_relations(M);
    CHECK(r.ok());
    for (const auto& f : r.failures) MESSAGE(f);
  }
}
