#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "tfym/lie_algebra.hpp"

using namespace tfym;

namespace {

AlgebraPtr share(LieAlgebra L) { return std::make_shared<const LieAlgebra>(std::move(L)); }

bool same_coords(const AlgebraElement& a, const Vec& want) { return a.coords == want; }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational(" +2/3 ") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("abc"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1.5"), ConfigError);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("su(2) brackets follow the Levi-Civita symbol") {
  const auto su2 = share(su2_algebra("su2"));
  CHECK(same_coords(bracket(basis_element(su2, 0), basis_element(su2, 1)), {0, 0, 1}));
  CHECK(same_coords(bracket(basis_element(su2, 1), basis_element(su2, 2)), {1, 0, 0}));
  CHECK(same_coords(bracket(basis_element(su2, 2), basis_element(su2, 0)), {0, 1, 0}));
  CHECK(same_coords(bracket(basis_element(su2, 1), basis_element(su2, 0)), {0, 0, -1}));
  CHECK(same_coords(bracket(basis_element(su2, 2), basis_element(su2, 2)), {0, 0, 0}));
}

TEST_CASE("aff(1) bracket") {
  const auto a = share(aff1_algebra("aff1"));
  CHECK(same_coords(bracket(basis_element(a, 0), basis_element(a, 1)), {0, 1}));
}

TEST_CASE("builtin algebras satisfy Jacobi and carry faithful representations") {
  const LieAlgebra su2 = su2_algebra("su2");
  for (const LieAlgebra& L : {abelian_algebra("r3", 3), su2, u2_algebra("u2"), aff1_algebra("aff1"),
                              direct_sum("su2+su2", su2, su2)}) {
    CAPTURE(L.name);
    CHECK(jacobi_residual(L) == 0);
    CHECK(antisymmetry_residual(L) == 0);
    CHECK(representation_residual(L) == 0);
  }
}

TEST_CASE("Jacobi detects a non-Lie bracket") {
  // [e0, e1] = e1, [e1, e2] = e0: the cyclic sum on (e0, e1, e2) is -e0
  LieAlgebra L("bad", 3);
  L.structure(0, 1, 1) = 1;
  L.structure(1, 0, 1) = -1;
  L.structure(1, 2, 0) = 1;
  L.structure(2, 1, 0) = -1;
  CHECK(antisymmetry_residual(L) == 0);
  CHECK(jacobi_residual(L) == 1);
  L.structure(2, 1, 0) = 0;
  CHECK(antisymmetry_residual(L) != 0);
}

TEST_CASE("bracket is bilinear and antisymmetric on random elements") {
  const auto u2 = share(u2_algebra("u2"));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto x = random_element(u2, 3 * s, 4), y = random_element(u2, 3 * s + 1, 4), z = random_element(u2, 3 * s + 2, 4);
    Vec sum(4);
    for (int i = 0; i < 4; ++i) sum[i] = y.coords[i] + 2 * z.coords[i];
    const auto lhs = bracket(x, make_element(u2, sum));
    const auto by = bracket(x, y), bz = bracket(x, z), yx = bracket(y, x);
    for (int i = 0; i < 4; ++i) {
      CHECK(lhs.coords[i] == by.coords[i] + 2 * bz.coords[i]);
      CHECK(by.coords[i] == -yx.coords[i]);
    }
  }
}

TEST_CASE("float bracket agrees with the exact one") {
  const LieAlgebra L = u2_algebra("u2");
  const auto u2 = share(L);
  const auto x = random_element(u2, 7, 5), y = random_element(u2, 8, 5);
  const auto exact = bracket(x, y);
  std::vector<double> xf, yf;
  for (int i = 0; i < 4; ++i) {
    xf.push_back(x.coords[i].get_d());
    yf.push_back(y.coords[i].get_d());
  }
  const auto f = bracket_float(L, xf, yf);
  for (int i = 0; i < 4; ++i) CHECK(f[i] == doctest::Approx(exact.coords[i].get_d()));
}

TEST_CASE("elements are checked against their algebra") {
  const auto su2 = share(su2_algebra("su2"));
  const auto other = share(su2_algebra("su2b"));
  CHECK_THROWS_AS(make_element(su2, Vec(2)), StructuralError);
  CHECK_THROWS_AS(bracket(basis_element(su2, 0), basis_element(other, 1)), StructuralError);
}

TEST_CASE("random elements are deterministic and bounded") {
  const auto su2 = share(su2_algebra("su2"));
  const auto a = random_element(su2, 42, 3), b = random_element(su2, 42, 3), c = random_element(su2, 43, 3);
  CHECK(a.coords == b.coords);
  CHECK(a.coords != c.coords);
  for (const auto& q : a.coords) {
    CHECK(abs(q.get_num()) <= 3);
    CHECK(q.get_den() <= 3);
  }
  CHECK_THROWS_AS(random_element(su2, 1, 0), PreconditionError);
}

TEST_CASE("derived seeds separate streams") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  Rng r1(5), r2(5);
  for (int i = 0; i < 20; ++i) {
    const auto v = r1.uniform(-3, 3);
    CHECK(v == r2.uniform(-3, 3));
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("exact linear algebra") {
  Matrix a(3, 3);
  a(0, 0) = 2, a(0, 1) = 1, a(1, 1) = 3, a(1, 2) = -1, a(2, 0) = 1, a(2, 2) = 1;
  CHECK(inverse(a) * a == Matrix::identity(3));
  CHECK(rank(a) == 3);

  Matrix s(2, 3);
  s(0, 0) = 1, s(0, 1) = 2, s(0, 2) = 3, s(1, 0) = 2, s(1, 1) = 4, s(1, 2) = 6;
  CHECK(rank(s) == 1);
  const Matrix N = nullspace(s);
  CHECK(N.cols == 2);
  CHECK((s * N).is_zero());
  CHECK_THROWS_AS(inverse(s * transpose(s)), StructuralError);

  Vec x;
  CHECK(solve(s, {6, 12}, x));
  CHECK(s * x == Vec{6, 12});
  CHECK_FALSE(solve(s, {1, 1}, x));

  Matrix p = Matrix::identity(2);
  p(0, 1) = p(1, 0) = Rational(1, 2);
  CHECK(is_symmetric(p));
  CHECK(is_positive_definite(p));
  p(0, 1) = p(1, 0) = 2;
  CHECK_FALSE(is_positive_definite(p));
}
