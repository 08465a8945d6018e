#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfym/gauge.hpp"

namespace tfym {

// (delta A, delta B, delta C), stored with the same layout as a connection.
using VariationTriple = ThreeConnection<Rational>;

// Top form <F1, *F1> + <F2, *F2> + <Omega3, *Omega3>.
template <class T>
Form<T> lagrangian(const Calculus<T>& calc, const ThreeConnection<T>& c) {
  const auto s = curvatures(calc, c);
  return calc.pair(s.f1, hodge(s.f1)) + calc.pair(s.f2, hodge(s.f2)) + calc.pair(s.omega3, hodge(s.omega3));
}

Rational action(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c);
double action_quadrature(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c);

VariationTriple bump(const VariationTriple& v);
// True iff every coefficient vanishes on each face x_i = 0 and x_i = 1.
bool vanishes_on_boundary(const VariationTriple& v);

// conn + eps * v with eps carried as polynomial variable index d.
ThreeConnection<Rational> shifted_connection(const ThreeConnection<Rational>& c, const VariationTriple& v);

// S(conn + eps v) as a polynomial in eps (the ambient variables integrated out).
Polynomial<Rational> action_in_eps(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                   const VariationTriple& v);

// d/d eps at 0 of S(conn + eps v), from an order-1 truncated expansion.
Rational first_variation_exact(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                               const VariationTriple& v);

struct ChannelPairing {
  Rational a, b, c;
  Rational total() const { return a + b + c; }
};

// 2 * int <dA, EA> - <dB, EB> + <dC, EC>, split per channel (signs included).
// Throws PreconditionError unless v vanishes on the boundary.
ChannelPairing bulk_pairing_channels(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                     const VariationTriple& v);
Rational bulk_pairing(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c, const VariationTriple& v);

// Same pairing without the boundary precondition: for variations that do not vanish
// on the boundary, first_variation_exact minus this is the dropped boundary term.
Rational boundary_discrepancy(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                              const VariationTriple& v);

struct SweepRow {
  double step = 0;
  double central_difference = 0;
  double error = 0;
};

struct GradCheckReport {
  Rational exact_linear_coefficient;
  Rational bulk_pairing_value;
  Rational discrepancy;
  ChannelPairing channels;
  std::vector<SweepRow> sweep;
  std::optional<double> convergence_order;
  std::string sweep_note;  // reason when the order is not fitted
};

// Central differences (S(h) - S(-h)) / 2h in double precision, with S from
// pointwise_actions, compared against the exact bulk pairing.
std::vector<SweepRow> float_sweep(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                  const VariationTriple& v, const std::vector<double>& steps, double reference);
// Least-squares slope of log(error) against log(step).
std::optional<double> convergence_order(const std::vector<SweepRow>& rows);

// True when every curvature is affine in eps along v, so S(conn + eps v) has degree <= 2
// and central differences carry no truncation error.
bool action_quadratic_in_eps(const Calculus<Rational>& calc, const VariationTriple& v);

// int over the box of the sum of squared coefficients.
Rational l2_norm_squared(const Form<Rational>& w);
// v rescaled by a two-digit rational close to |c| / |v| (L2 over the box, all three
// components), so sweep steps are relative to the size of the connection. Returns v
// unchanged when either norm vanishes.
VariationTriple normalized_variation(const ThreeConnection<Rational>& c, const VariationTriple& v);

GradCheckReport gradcheck_report(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                 const VariationTriple& v, bool with_sweep,
                                 const std::vector<double>& steps = {1e-2, 1e-3, 1e-4});

}  // namespace tfym
