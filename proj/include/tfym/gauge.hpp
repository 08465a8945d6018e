#pragma once

#include <utility>

#include "tfym/calculus.hpp"

namespace tfym {

constexpr int kMinGaugeDim = 4;
constexpr int kMaxGaugeDim = 6;

template <class T>
struct ThreeConnection {
  Form<T> A;  // 1-form in g
  Form<T> B;  // 2-form in h
  Form<T> C;  // 3-form in l

  int dim() const { return A.d; }
  template <class U>
  ThreeConnection<U> convert() const {
    return {A.template convert<U>(), B.template convert<U>(), C.template convert<U>()};
  }
  ThreeConnection& operator+=(const ThreeConnection& o) {
    A += o.A;
    B += o.B;
    C += o.C;
    return *this;
  }
};

template <class T>
struct CurvatureSet {
  Form<T> omega1, omega2, omega3, f1, f2;
};

// Three residual forms of one identity or equation system.
template <class T>
struct ResidualTriple {
  Form<T> r1, r2, r3;
  bool is_zero() const { return r1.is_zero() && r2.is_zero() && r3.is_zero(); }
};

template <class T>
void check_connection(const Calculus<T>& calc, const ThreeConnection<T>& c, bool gauge_dims = true) {
  const int d = c.A.d;
  if (gauge_dims && (d < kMinGaugeDim || d > kMaxGaugeDim))
    throw PreconditionError("ambient dimension must lie in [" + std::to_string(kMinGaugeDim) + ", " +
                            std::to_string(kMaxGaugeDim) + "]");
  auto need = [&](const Form<T>& w, int k, Part p, const char* name) {
    if (w.d != d || w.degree != k || w.slot != slot_of(p) || w.width != calc.width(p))
      throw StructuralError(std::string("connection component ") + name + " has the wrong degree, algebra or dimension");
  };
  need(c.A, 1, Part::g, "A");
  need(c.B, 2, Part::h, "B");
  need(c.C, 3, Part::l, "C");
}

template <class T>
CurvatureSet<T> curvatures(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  check_connection(calc, c, false);
  CurvatureSet<T> s;
  s.omega1 = exterior_derivative(c.A) + calc.self_wedge(c.A);
  s.omega2 = exterior_derivative(c.B) + calc.action(c.A, c.B);
  s.omega3 = exterior_derivative(c.C) + calc.action(c.A, c.C) + calc.peiffer(c.B, c.B);
  s.f1 = s.omega1 - calc.alpha(c.B);
  s.f2 = s.omega2 - calc.beta(c.C);
  return s;
}

template <class T>
std::pair<bool, bool> is_fake_flat(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  const auto s = curvatures(calc, c);
  return {s.f1.is_zero(), s.f2.is_zero()};
}

// Each residual is (left side) - (right side) of one 3-Bianchi identity.
template <class T>
ResidualTriple<T> bianchi_residuals(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  const auto s = curvatures(calc, c);
  const Form<T> f1a = s.f1 + calc.alpha(c.B);
  const Form<T> f2b = s.f2 + calc.beta(c.C);
  ResidualTriple<T> r;
  r.r1 = exterior_derivative(s.f1) + calc.bracket(c.A, s.f1) + calc.alpha(s.f2);
  r.r2 = exterior_derivative(s.f2) + calc.action(c.A, s.f2) - calc.action(f1a, c.B) +
         calc.beta(s.omega3 - calc.peiffer(c.B, c.B));
  r.r3 = exterior_derivative(s.omega3) + calc.action(c.A, s.omega3) - calc.action(f1a, c.C) -
         calc.peiffer(f2b, c.B) - calc.peiffer(c.B, f2b);
  return r;
}

// The identity with alpha(F_2 + beta(C)) in place of alpha(F_2); equal because alpha beta = 0.
template <class T>
Form<T> bianchi_first_variant(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  const auto s = curvatures(calc, c);
  return exterior_derivative(s.f1) + calc.bracket(c.A, s.f1) + calc.alpha(s.f2 + calc.beta(c.C));
}

template <class T>
ResidualTriple<T> flat_bianchi_residuals(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  if (!maps_trivial(calc.module()))
    throw PreconditionError("flat Bianchi identities need alpha = 0 and beta = 0");
  const auto s = curvatures(calc, c);
  ResidualTriple<T> r;
  r.r1 = exterior_derivative(s.omega1) + calc.bracket(c.A, s.omega1);
  r.r2 = exterior_derivative(s.omega2) + calc.action(c.A, s.omega2) - calc.action(s.omega1, c.B);
  r.r3 = exterior_derivative(s.omega3) + calc.action(c.A, s.omega3) - calc.action(s.omega1, c.C) -
         calc.peiffer(s.omega2, c.B) - calc.peiffer(c.B, s.omega2);
  return r;
}

// EA, EB, EC: the field equations written as (left side) - (right side).
template <class T>
ResidualTriple<T> field_eq_residuals(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  check_connection(calc, c);
  calc.triple();
  const int d = c.dim();
  const auto s = curvatures(calc, c);
  const Form<T> sf1 = hodge(s.f1), sf2 = hodge(s.f2), so3 = hodge(s.omega3);
  const T sign_d = (d % 2 == 0) ? T(1) : T(-1);
  ResidualTriple<T> r;
  r.r1 = exterior_derivative(sf1) + calc.bracket(c.A, sf1) - calc.sigma_bar(sf2, c.B) -
         calc.kappa_bar(so3, c.C).scaled(sign_d);
  r.r2 = exterior_derivative(sf2) + calc.action(c.A, sf2) + calc.eta_bar(1, so3, c.B) + calc.eta_bar(2, so3, c.B) +
         calc.alpha_star(sf1);
  r.r3 = exterior_derivative(so3) + calc.action(c.A, so3) - calc.beta_star(sf2);
  return r;
}

// The same system written with the Omega curvatures, as stated for fake-flat
// connections. It coincides with field_eq_residuals only when alpha(B) = 0 and
// beta(C) = 0 in addition to fake-flatness.
template <class T>
ResidualTriple<T> fake_flat_field_eq_residuals(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  check_connection(calc, c);
  calc.triple();
  const auto s = curvatures(calc, c);
  if (!s.f1.is_zero() || !s.f2.is_zero()) throw PreconditionError("connection is not fake-flat");
  const int d = c.dim();
  const Form<T> so1 = hodge(s.omega1), so2 = hodge(s.omega2), so3 = hodge(s.omega3);
  const T sign_d = (d % 2 == 0) ? T(1) : T(-1);
  ResidualTriple<T> r;
  r.r1 = exterior_derivative(so1) + calc.bracket(c.A, so1) - calc.sigma_bar(so2, c.B) -
         calc.kappa_bar(so3, c.C).scaled(sign_d);
  r.r2 = exterior_derivative(so2) + calc.action(c.A, so2) + calc.eta_bar(2, so3, c.B) + calc.eta_bar(1, so3, c.B);
  r.r3 = exterior_derivative(so3) + calc.action(c.A, so3);
  return r;
}

struct RandomFormSpec {
  int degree_cap = 3;
  int terms = 3;
  int bound = 3;
};

ThreeConnection<Rational> random_connection(const DifferentialTwoCrossedModule& M, int d, std::uint64_t seed,
                                            const RandomFormSpec& spec = {});

// A = d f X_0 for a random polynomial f: flat, since dA = 0 and A ^ A = 0.
Form<Rational> random_flat_gauge_field(const DifferentialTwoCrossedModule& M, int d, std::uint64_t seed,
                                       const RandomFormSpec& spec = {});

// Solves alpha(B) = Omega_1 and beta(C) = dB + A ^|> B with the configured
// generalized inverses (X R X = X), adding the kernel parts (1 - R X) of b_free
// and c_free. A zero map needs no configured inverse.
// Throws ConstructionError when the result is not fake-flat.
ThreeConnection<Rational> fake_flat_witness(const Calculus<Rational>& calc, const Form<Rational>& A,
                                            const Form<Rational>& b_free, const Form<Rational>& c_free);

}  // namespace tfym
