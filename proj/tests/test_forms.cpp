#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "suites.hpp"
#include "tfym/instances.hpp"

using namespace tfym;

namespace {

using P = Polynomial<Rational>;

P x(int i) { return P::variable(i); }

// scalar form with a single component c dx_I
Form<Rational> basic(int d, std::vector<int> I, const P& c) {
  std::uint32_t m = 0;
  for (int i : I) m |= 1u << i;
  Form<Rational> w(d, static_cast<int>(I.size()), Slot::scalar, 1);
  w.at(tuples(d, w.degree).index_of[m], 0) = c;
  return w;
}

const Tensor3& scalar_product() {
  static const Tensor3 t = [] {
    Tensor3 s(1, 1, 1);
    s(0, 0, 0) = 1;
    return s;
  }();
  return t;
}

Form<Rational> wedge(const Form<Rational>& a, const Form<Rational>& b) {
  return wedge_bilinear(a, b, Bilinear<Rational>::from_tensor(scalar_product()), Slot::scalar);
}

}  // namespace

TEST_CASE("tuple tables and shuffle signs") {
  CHECK(tuples(4, 2).masks.size() == 6);
  CHECK(tuples(4, 2).masks.front() == 0b0011u);
  CHECK(shuffle_sign(0b0001u, 0b0010u) == 1);
  CHECK(shuffle_sign(0b0010u, 0b0001u) == -1);
  CHECK(shuffle_sign(0b0011u, 0b0001u) == 0);
  CHECK(shuffle_sign(0b0110u, 0b1001u) == 1);
  CHECK(mask_to_indices(0b1010u) == std::vector<int>{1, 3});
}

TEST_CASE("d(x1 dx2) = dx1 ^ dx2") {
  const auto w = basic(4, {1}, x(0));
  CHECK(exterior_derivative(w) == basic(4, {0, 1}, P::constant(1)));
  // d(x2 dx1) = dx2 ^ dx1 = -dx1 ^ dx2
  CHECK(exterior_derivative(basic(4, {0}, x(1))) == basic(4, {0, 1}, P::constant(-1)));
  CHECK(exterior_derivative(basic(4, {0, 1}, P::constant(7))).is_zero());
  CHECK(exterior_derivative(basic(2, {0, 1}, x(0))).degree == 3);
}

TEST_CASE("Euclidean star in four dimensions") {
  CHECK(hodge(basic(4, {0, 1}, P::constant(1))) == basic(4, {2, 3}, P::constant(1)));
  CHECK(hodge(basic(4, {0, 2}, P::constant(1))) == basic(4, {1, 3}, P::constant(-1)));
  CHECK(hodge(basic(4, {}, P::constant(1))) == basic(4, {0, 1, 2, 3}, P::constant(1)));
  CHECK(hodge(basic(4, {1}, x(0))) == basic(4, {0, 2, 3}, x(0).scaled(-1)));
  // ** = (-1)^{k(d-k)}
  const auto w = basic(3, {1}, x(2));
  CHECK(hodge(hodge(w)) == w);
}

TEST_CASE("wedge signs") {
  const auto dx0 = basic(4, {0}, P::constant(1)), dx1 = basic(4, {1}, P::constant(1));
  CHECK(wedge(dx0, dx1) == basic(4, {0, 1}, P::constant(1)));
  CHECK(wedge(dx1, dx0) == basic(4, {0, 1}, P::constant(-1)));
  CHECK(wedge(dx0, dx0).is_zero());
  const auto f = basic(4, {}, x(3));
  CHECK(wedge(f, dx1) == basic(4, {1}, x(3)));
  CHECK_THROWS_AS(wedge(dx0, basic(3, {0}, P::constant(1))), StructuralError);
}

TEST_CASE("box integrals") {
  CHECK(integrate_box(basic(4, {0, 1, 2, 3}, P::constant(1))) == 1);
  CHECK(integrate_box(basic(4, {0, 1, 2, 3}, x(0) * x(1))) == Rational(1, 4));
  CHECK(integrate_box(basic(2, {0, 1}, x(0) * x(0) * x(1))) == Rational(1, 6));
  CHECK(integrate_box(basic(2, {0, 1}, bump_polynomial(2))) == Rational(1, 36));
  CHECK_THROWS_AS(integrate_box(basic(4, {0, 1}, P::constant(1))), StructuralError);
  CHECK(integrate_box_quadrature(basic(4, {0, 1, 2, 3}, x(0) * x(1))) == doctest::Approx(0.25));
}

TEST_CASE("Gauss-Legendre rule integrates to degree 2n-1") {
  std::vector<double> nodes, weights;
  gauss_legendre01(3, nodes, weights);
  REQUIRE(nodes.size() == 3);
  double s = 0, s5 = 0;
  for (int i = 0; i < 3; ++i) {
    s += weights[i];
    s5 += weights[i] * nodes[i] * nodes[i] * nodes[i] * nodes[i] * nodes[i];
  }
  CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s5 == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("bracket wedge equals the graded commutator of the matrix wedge") {
  const auto M = u2_crossed_instance();
  const Calculus<Rational> calc(M);
  Rng rng(9);
  for (int k1 = 0; k1 <= 2; ++k1)
    for (int k2 = 0; k2 <= 2; ++k2) {
      const auto a = suites::rand_form(rng, M, 4, k1, Part::g), b = suites::rand_form(rng, M, 4, k2, Part::g);
      const auto comm = calc.plain(a, b) - calc.plain(b, a).scaled(suites::sign_pow(k1 * k2));
      CHECK(calc.to_matrix(calc.bracket(a, b)) == comm);
      CHECK(calc.from_matrix(calc.to_matrix(a)) == a);
    }
}

TEST_CASE("combinators reject forms in the wrong algebra") {
  const auto M = su2_peiffer_instance();
  const Calculus<Rational> calc(M);
  const auto A = calc.zero(4, 1, Part::g), B = calc.zero(4, 2, Part::h);
  CHECK_THROWS_AS(calc.peiffer(A, B), StructuralError);
  CHECK_THROWS_AS(calc.bracket(A, B), StructuralError);
  CHECK_THROWS_AS(calc.pair(A, A), PreconditionError);
  CHECK_NOTHROW(calc.action(A, B));
}

TEST_CASE("lifted maps compose to zero") {
  const auto M = su2_split_instance();
  const Calculus<Rational> calc(M);
  Rng rng(3);
  const auto C = suites::rand_form(rng, M, 4, 3, Part::l, 3, 4);
  CHECK_FALSE(calc.beta(C).is_zero());
  CHECK(calc.alpha(calc.beta(C)).is_zero());
}

TEST_CASE("serialization round trip") {
  const auto M = su2_split_instance();
  Rng rng(4);
  std::vector<NamedForm> forms = {{"A", suites::rand_form(rng, M, 4, 1, Part::g, 3, 3)},
                                  {"B", suites::rand_form(rng, M, 5, 2, Part::h, 3, 3)},
                                  {"f", basic(3, {}, P::constant(Rational(-2, 7)))}};
  const auto back = parse_forms(serialize_forms(forms));
  REQUIRE(back.size() == forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    CHECK(back[i].name == forms[i].name);
    CHECK(back[i].form == forms[i].form);
  }
  CHECK_THROWS(parse_forms("form A g 1 4 3\n0 0 0,0,0,0 1/0\nend\n"));
}

TEST_CASE("oracle agreement on a small kernel run") {
  suites::KernelTally t;
  for (const auto& name : {"su2_split", "u2_crossed", "abelian_chain"}) suites::kernel_instance(suites::shipped(name), 2, t);
  for (const suites::Result* r : {&t.d_squared, &t.double_star, &t.pairing_symmetry, &t.quadrature, &t.oracle}) {
    CHECK(r->ok());
    for (const auto& f : r->failures) MESSAGE(f);
  }
  CHECK(t.worst_relative <= 1e-10);
}
