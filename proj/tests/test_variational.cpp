#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "suites.hpp"
#include "tfym/instances.hpp"
#include "tfym/pointwise.hpp"

using namespace tfym;

namespace {

const RandomFormSpec small{1, 2, 2};

ThreeConnection<Rational> plus(const ThreeConnection<Rational>& c, const VariationTriple& v, const Rational& h) {
  return {c.A + v.A.scaled(h), c.B + v.B.scaled(h), c.C + v.C.scaled(h)};
}

// S is a polynomial of degree <= 4 in eps, so the five-point stencil is exact.
Rational stencil_derivative(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                            const VariationTriple& v) {
  const Rational s1 = action(calc, plus(c, v, 1)), sm1 = action(calc, plus(c, v, -1));
  const Rational s2 = action(calc, plus(c, v, 2)), sm2 = action(calc, plus(c, v, -2));
  return (8 * (s1 - sm1) - (s2 - sm2)) / 12;
}

struct Setup {
  DifferentialTwoCrossedModule M;
  InvariantFormTriple T;
};

Setup setup(DifferentialTwoCrossedModule M) {
  auto T = InvariantFormTriple::identity(M);
  return {std::move(M), std::move(T)};
}

}  // namespace

TEST_CASE("bump makes a variation vanish on the boundary") {
  const auto M = su2_peiffer_instance();
  const auto v = random_connection(M, 4, 1, small);
  CHECK_FALSE(vanishes_on_boundary(v));
  CHECK(vanishes_on_boundary(bump(v)));
  const auto b = bump_polynomial(2);
  CHECK(b.total_degree() == 4);
}

TEST_CASE("exact first variation matches an independent five-point stencil and the bulk pairing") {
  for (auto [M, T] : {setup(su2_peiffer_instance()), setup(su2_split_instance()), setup(u2_crossed_instance())}) {
    const Calculus<Rational> calc(M, T);
    CAPTURE(M.name);
    const auto c = random_connection(M, 4, 10, small);
    const auto v = bump(random_connection(M, 4, 20, small));
    const Rational exact = first_variation_exact(calc, c, v);
    CHECK(exact == stencil_derivative(calc, c, v));
    CHECK(exact == bulk_pairing(calc, c, v));
    CHECK(bulk_pairing_channels(calc, c, v).total() == exact);
  }
}

TEST_CASE("action as a polynomial in eps") {
  const auto [M, T] = setup(su2_split_instance());
  const Calculus<Rational> calc(M, T);
  const auto c = random_connection(M, 4, 3, small);
  const auto v = bump(random_connection(M, 4, 4, small));
  const auto poly = action_in_eps(calc, c, v);
  CHECK(poly.total_degree() <= 4);
  CHECK(poly.coefficient(0) == action(calc, c));
  CHECK(poly.coefficient(var_monomial(4)) == first_variation_exact(calc, c, v));
}

TEST_CASE("unbumped variations are refused by the bulk pairing") {
  const auto [M, T] = setup(su2_peiffer_instance());
  const Calculus<Rational> calc(M, T);
  const auto c = random_connection(M, 4, 5, small);
  const auto v = random_connection(M, 4, 6, small);
  CHECK_THROWS_AS(bulk_pairing(calc, c, v), PreconditionError);
  // the discrepancy is the dropped boundary term
  CHECK(boundary_discrepancy(calc, c, v) != 0);
  CHECK(boundary_discrepancy(calc, c, bump(v)) == 0);
}

TEST_CASE("action is nonnegative and matches both quadratures") {
  const auto [M, T] = setup(su2_split_instance());
  const Calculus<Rational> calc(M, T);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto c = random_connection(M, 4, 30 + s, small);
    const Rational S = action(calc, c);
    CHECK(S >= 0);
    CHECK(action_quadrature(calc, c) == doctest::Approx(S.get_d()).epsilon(1e-10));
    CHECK(pointwise_action(M, T, c) == doctest::Approx(S.get_d()).epsilon(1e-10));
  }
}

TEST_CASE("convergence order of synthetic rows") {
  std::vector<SweepRow> rows;
  for (double h : {1e-2, 1e-3, 1e-4}) rows.push_back({h, 0, 3 * h * h});
  REQUIRE(convergence_order(rows).has_value());
  CHECK(*convergence_order(rows) == doctest::Approx(2.0));
  CHECK_FALSE(convergence_order({rows[0]}).has_value());
}

TEST_CASE("normalized variation") {
  const auto M = su2_peiffer_instance();
  const auto c = random_connection(M, 4, 1, small);
  const auto v = bump(random_connection(M, 4, 2, small));
  const auto n = normalized_variation(c, v);
  const Rational nc = l2_norm_squared(c.A) + l2_norm_squared(c.B) + l2_norm_squared(c.C);
  const Rational nn = l2_norm_squared(n.A) + l2_norm_squared(n.B) + l2_norm_squared(n.C);
  CHECK(std::sqrt(nn.get_d() / nc.get_d()) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(vanishes_on_boundary(n));
}

TEST_CASE("float sweep converges at second order where S is not quadratic") {
  const auto [M, T] = setup(su2_peiffer_instance());
  const Calculus<Rational> calc(M, T);
  const auto c = random_connection(M, 4, 40, {2, 3, 3});
  const auto v = normalized_variation(c, bump(random_connection(M, 4, 41, {2, 3, 3})));
  CHECK_FALSE(action_quadratic_in_eps(calc, v));
  const auto rep = gradcheck_report(calc, c, v, true);
  CHECK(rep.discrepancy == 0);
  REQUIRE(rep.convergence_order.has_value());
  CHECK(std::fabs(*rep.convergence_order - 2.0) <= 0.2);
}

TEST_CASE("abelian instances have quadratic actions") {
  const auto [M, T] = setup(abelian_chain_instance());
  const Calculus<Rational> calc(M, T);
  const auto v = bump(random_connection(M, 4, 1, small));
  CHECK(action_quadratic_in_eps(calc, v));
  const auto rep = gradcheck_report(calc, random_connection(M, 4, 2, small), v, true);
  CHECK(rep.discrepancy == 0);
  CHECK_FALSE(rep.convergence_order.has_value());
  CHECK_FALSE(rep.sweep_note.empty());
}

TEST_CASE("gradcheck command on one instance") {
  suites::VariationalStats st;
  const auto r = suites::variational_suite(2, st, {"su2_peiffer"});
  CHECK(r.ok());
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(st.exact_pairs == 2);
}

TEST_CASE("reductions") {
  const auto M = su2_peiffer_instance();
  CHECK_THROWS_AS(check_arrow_applicable(M, ReductionArrow::ym3_to_ym2), PreconditionError);
  CHECK_NOTHROW(check_arrow_applicable(u2_crossed_instance(), ReductionArrow::ym3_to_ym2));
  CHECK(arrow_from_name(arrow_name(ReductionArrow::ym3_to_elec2)) == ReductionArrow::ym3_to_elec2);
  CHECK_THROWS(arrow_from_name("4ym_to_0ym"));

  const auto U = u1_h_instance();
  const Calculus<Rational> calc(U, InvariantFormTriple::identity(U));
  const auto c = random_connection(U, 4, 3, small);
  CHECK(electro_residual(c.B) == field_eq_residuals(calc, c).r2);
  for (const auto& cmp : compare_reduction(calc, ReductionArrow::ym3_to_elec2, c)) {
    CAPTURE(cmp.name);
    CHECK(cmp.residual == 0);
  }
  const auto r = suites::reduction_suite(1);
  CHECK(r.ok());
  for (const auto& f : r.failures) MESSAGE(f);
}
