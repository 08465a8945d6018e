#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suites.hpp"
#include "tfym/instances.hpp"

using namespace tfym;

namespace {

const RandomFormSpec small{2, 2, 3};

ThreeConnection<Rational> witness(const Calculus<Rational>& calc, int d, std::uint64_t seed) {
  const auto& M = calc.module();
  const auto A = random_flat_gauge_field(M, d, seed, small);
  Rng rb(derive_seed(seed, 1)), rc(derive_seed(seed, 2));
  return fake_flat_witness(calc, A, random_form(rb, d, 2, Slot::h, M.h->dim, 2, 2, 3),
                           random_form(rc, d, 3, Slot::l, M.l->dim, 2, 2, 3));
}

}  // namespace

TEST_CASE("random connections are deterministic") {
  const auto M = su2_split_instance();
  const auto a = random_connection(M, 4, 77, small), b = random_connection(M, 4, 77, small);
  const auto c = random_connection(M, 4, 78, small);
  CHECK(a.A == b.A);
  CHECK(a.B == b.B);
  CHECK(a.C == b.C);
  CHECK_FALSE(a.A == c.A);
  CHECK(a.dim() == 4);
  CHECK(a.B.width == 6);
}

TEST_CASE("Bianchi identities vanish on valid instances") {
  for (const auto& M : {su2_peiffer_instance(), su2_split_instance(), u2_crossed_instance(), abelian_chain_instance()}) {
    const Calculus<Rational> calc(M);
    for (int d : {4, 5})
      for (std::uint64_t s = 0; s < 2; ++s) {
        CAPTURE(M.name);
        CAPTURE(d);
        const auto c = random_connection(M, d, s, small);
        CHECK(bianchi_residuals(calc, c).is_zero());
        CHECK(bianchi_first_variant(calc, c).is_zero());
      }
  }
}

TEST_CASE("curvatures of a flat abelian potential") {
  const auto M = su2_u1_instance();
  const Calculus<Rational> calc(M);
  const auto A = random_flat_gauge_field(M, 4, 5, small);
  REQUIRE_FALSE(A.is_zero());
  ThreeConnection<Rational> c{A, calc.zero(4, 2, Part::h), calc.zero(4, 3, Part::l)};
  const auto s = curvatures(calc, c);
  CHECK(s.omega1.is_zero());
  CHECK(s.f1.is_zero());
  CHECK(s.omega3.is_zero());
}

TEST_CASE("flat variant agrees when the maps vanish") {
  const auto M = su2_u1_instance();
  const Calculus<Rational> calc(M);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto c = random_connection(M, 4, s, small);
    const auto a = bianchi_residuals(calc, c), b = flat_bianchi_residuals(calc, c);
    CHECK(b.is_zero());
    CHECK(a.r1 == b.r1);
    CHECK(a.r2 == b.r2);
    CHECK(a.r3 == b.r3);
  }
  const auto P = su2_peiffer_instance();
  const Calculus<Rational> pc(P);
  CHECK_THROWS_AS(flat_bianchi_residuals(pc, random_connection(P, 4, 0, small)), PreconditionError);
}

TEST_CASE("the broken lifting shows up in the third identity at d = 5") {
  auto M = su2_peiffer_instance();
  M.peiffer(0, 1, 2) += 1;
  const Calculus<Rational> calc(M);
  // the third residual is a 5-form, so it needs five dimensions
  const auto c4 = random_connection(M, 4, 0, small);
  CHECK(bianchi_residuals(calc, c4).r3.degree == 5);
  CHECK(bianchi_residuals(calc, c4).r3.is_zero());
  int nonzero = 0;
  for (std::uint64_t s = 0; s < 3; ++s) nonzero += !bianchi_residuals(calc, random_connection(M, 5, s, small)).r3.is_zero();
  CHECK(nonzero >= 1);
}

TEST_CASE("field equations need a gauge dimension and a triple") {
  const auto M = su2_peiffer_instance();
  const Calculus<Rational> bare(M), calc(M, InvariantFormTriple::identity(M));
  const auto c4 = random_connection(M, 4, 1, small);
  CHECK_THROWS_AS(field_eq_residuals(bare, c4), PreconditionError);
  CHECK_NOTHROW(field_eq_residuals(calc, c4));
  CHECK_THROWS_AS(field_eq_residuals(calc, random_connection(M, 3, 1, small)), PreconditionError);
  CHECK_THROWS_AS(field_eq_residuals(calc, random_connection(M, 7, 1, small)), PreconditionError);
  auto bad = c4;
  bad.B = calc.zero(4, 1, Part::h);
  CHECK_THROWS_AS(field_eq_residuals(calc, bad), StructuralError);
}

TEST_CASE("fake-flat witness with vanishing maps reproduces the general equations") {
  const auto M = su2_u1_instance();
  const Calculus<Rational> calc(M, InvariantFormTriple::identity(M));
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto w = witness(calc, 4, s);
    const auto [f1, f2] = is_fake_flat(calc, w);
    CHECK(f1);
    CHECK(f2);
    const auto a = field_eq_residuals(calc, w), b = fake_flat_field_eq_residuals(calc, w);
    CHECK(a.r1 == b.r1);
    CHECK(a.r2 == b.r2);
    CHECK(a.r3 == b.r3);
  }
}

TEST_CASE("fake-flat witness with beta(C) nonzero gives a different system") {
  const auto M = su2_peiffer_instance();
  const Calculus<Rational> calc(M, InvariantFormTriple::identity(M));
  bool differs = false;
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto w = witness(calc, 4, s);
    const auto [f1, f2] = is_fake_flat(calc, w);
    CHECK(f1);
    CHECK(f2);
    if (calc.beta(w.C).is_zero()) continue;
    const auto a = field_eq_residuals(calc, w), b = fake_flat_field_eq_residuals(calc, w);
    differs |= !(a.r1 == b.r1 && a.r2 == b.r2 && a.r3 == b.r3);
  }
  CHECK(differs);
}

TEST_CASE("fake-flat witness needs Omega_1 in the image of alpha") {
  const auto M = su2_peiffer_instance();
  const Calculus<Rational> calc(M, InvariantFormTriple::identity(M));
  const auto c = random_connection(M, 4, 3, small);
  REQUIRE_FALSE(curvatures(calc, c).omega1.is_zero());
  CHECK_THROWS_AS(fake_flat_witness(calc, c.A, c.B, c.C), ConstructionError);
  CHECK_THROWS_AS(fake_flat_field_eq_residuals(calc, c), PreconditionError);
}

TEST_CASE("bianchi command over shipped instances") {
  double worst = 0;
  const auto r = suites::bianchi_suite(2, &worst);
  CHECK(r.ok());
  for (const auto& f : r.failures) MESSAGE(f);
}
