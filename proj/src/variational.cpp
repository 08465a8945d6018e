#include "tfym/variational.hpp"

#include <cmath>

#include "tfym/pointwise.hpp"

namespace tfym {

namespace {

Form<Rational> bump_form(const Form<Rational>& w, const Polynomial<Rational>& b) { return w.multiplied(b); }

bool form_vanishes_on_faces(const Form<Rational>& w) {
  for (const auto& p : w.coeffs)
    for (int i = 0; i < w.d; ++i)
      if (!p.substitute(i, Rational(0)).is_zero() || !p.substitute(i, Rational(1)).is_zero()) return false;
  return true;
}

Form<Rational> with_eps(const Form<Rational>& w, const Form<Rational>& dw) {
  const auto eps = Polynomial<Rational>::variable(w.d);
  return w + dw.multiplied(eps);
}

Rational integrate_pairing(const Calculus<Rational>& calc, const Form<Rational>& a, const Form<Rational>& b) {
  return integrate_box(calc.pair(a, b));
}

ChannelPairing pairing_unchecked(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                 const VariationTriple& v) {
  const auto E = field_eq_residuals(calc, c);
  ChannelPairing p;
  p.a = 2 * integrate_pairing(calc, v.A, E.r1);
  p.b = -2 * integrate_pairing(calc, v.B, E.r2);
  p.c = 2 * integrate_pairing(calc, v.C, E.r3);
  return p;
}

}  // namespace

Rational action(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c) {
  check_connection(calc, c);
  return integrate_box(lagrangian(calc, c));
}

double action_quadrature(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c) {
  check_connection(calc, c);
  return pointwise_action(calc.module(), calc.triple(), c);
}

VariationTriple bump(const VariationTriple& v) {
  const auto b = bump_polynomial(v.A.d);
  return {bump_form(v.A, b), bump_form(v.B, b), bump_form(v.C, b)};
}

bool vanishes_on_boundary(const VariationTriple& v) {
  return form_vanishes_on_faces(v.A) && form_vanishes_on_faces(v.B) && form_vanishes_on_faces(v.C);
}

ThreeConnection<Rational> shifted_connection(const ThreeConnection<Rational>& c, const VariationTriple& v) {
  if (c.dim() >= kMaxVars) throw StructuralError("no free polynomial variable for the variation parameter");
  return {with_eps(c.A, v.A), with_eps(c.B, v.B), with_eps(c.C, v.C)};
}

Polynomial<Rational> action_in_eps(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                   const VariationTriple& v) {
  check_connection(calc, c);
  check_connection(calc, v);
  return integrate_box_partial(lagrangian(calc, shifted_connection(c, v)));
}

Rational first_variation_exact(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                               const VariationTriple& v) {
  check_connection(calc, c);
  check_connection(calc, v);
  Calculus<Rational> lin = calc;
  lin.truncation = Truncation{c.dim(), 1};
  const auto s = integrate_box_partial(lagrangian(lin, shifted_connection(c, v)));
  return s.coefficient(var_monomial(c.dim()));
}

ChannelPairing bulk_pairing_channels(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                     const VariationTriple& v) {
  check_connection(calc, v);
  if (!vanishes_on_boundary(v))
    throw PreconditionError("variation does not vanish on the boundary of the box; apply bump() first");
  return pairing_unchecked(calc, c, v);
}

Rational bulk_pairing(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c, const VariationTriple& v) {
  return bulk_pairing_channels(calc, c, v).total();
}

Rational boundary_discrepancy(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                              const VariationTriple& v) {
  check_connection(calc, v);
  return first_variation_exact(calc, c, v) - pairing_unchecked(calc, c, v).total();
}

std::vector<SweepRow> float_sweep(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                  const VariationTriple& v, const std::vector<double>& steps, double reference) {
  check_connection(calc, c);
  check_connection(calc, v);
  std::vector<double> shifts;
  for (double h : steps) {
    shifts.push_back(h);
    shifts.push_back(-h);
  }
  const auto S = pointwise_actions(calc.module(), calc.triple(), c, v, shifts);
  std::vector<SweepRow> rows;
  for (size_t i = 0; i < steps.size(); ++i) {
    SweepRow r;
    r.step = steps[i];
    r.central_difference = (S[2 * i] - S[2 * i + 1]) / (2 * steps[i]);
    r.error = std::fabs(r.central_difference - reference);
    rows.push_back(r);
  }
  return rows;
}

std::optional<double> convergence_order(const std::vector<SweepRow>& rows) {
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (!(r.error > 0) || !(r.step > 0)) return std::nullopt;
    xs.push_back(std::log10(r.step));
    ys.push_back(std::log10(r.error));
  }
  if (xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

bool action_quadratic_in_eps(const Calculus<Rational>& calc, const VariationTriple& v) {
  // eps^2 parts of F1, F2 and Omega3
  return calc.self_wedge(v.A).is_zero() && calc.action(v.A, v.B).is_zero() &&
         (calc.action(v.A, v.C) + calc.peiffer(v.B, v.B)).is_zero();
}

Rational l2_norm_squared(const Form<Rational>& w) {
  PolyAccumulator<Rational> acc;
  for (const auto& p : w.coeffs)
    if (!p.is_zero()) acc.add(p * p, Rational(1));
  Form<Rational> top(w.d, w.d, Slot::scalar, 1);
  top.coeffs[0] = acc.finish();
  return integrate_box(top);
}

VariationTriple normalized_variation(const ThreeConnection<Rational>& c, const VariationTriple& v) {
  const Rational nc = l2_norm_squared(c.A) + l2_norm_squared(c.B) + l2_norm_squared(c.C);
  const Rational nv = l2_norm_squared(v.A) + l2_norm_squared(v.B) + l2_norm_squared(v.C);
  if (sgn(nc) == 0 || sgn(nv) == 0) return v;
  const double ratio = std::sqrt(to_double(nc) / to_double(nv));
  // two significant digits
  const int e = static_cast<int>(std::floor(std::log10(ratio))) - 1;
  Rational scale(static_cast<long>(std::llround(ratio / std::pow(10.0, e))));
  Rational ten_e(1);
  for (int i = 0; i < std::abs(e); ++i) ten_e *= 10;
  if (e >= 0)
    scale *= ten_e;
  else
    scale /= ten_e;
  return {v.A.scaled(scale), v.B.scaled(scale), v.C.scaled(scale)};
}

GradCheckReport gradcheck_report(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c,
                                 const VariationTriple& v, bool with_sweep, const std::vector<double>& steps) {
  GradCheckReport rep;
  rep.exact_linear_coefficient = first_variation_exact(calc, c, v);
  rep.channels = bulk_pairing_channels(calc, c, v);
  rep.bulk_pairing_value = rep.channels.total();
  rep.discrepancy = abs(rep.exact_linear_coefficient - rep.bulk_pairing_value);
  if (with_sweep) {
    rep.sweep = float_sweep(calc, c, v, steps, to_double(rep.bulk_pairing_value));
    // The central difference equals S1 + S3 h^2 exactly; with S3 = 0 only rounding is left.
    if (action_quadratic_in_eps(calc, v)) {
      rep.sweep_note = "S(eps) is quadratic along this variation: central differences are exact up to rounding";
    } else {
      rep.convergence_order = convergence_order(rep.sweep);
      if (!rep.convergence_order) rep.sweep_note = "error vanished at some step; order not fitted";
    }
  }
  return rep;
}

}  // namespace tfym
