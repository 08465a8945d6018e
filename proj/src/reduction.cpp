#include "tfym/reduction.hpp"

namespace tfym {

namespace {

struct ArrowInfo {
  ReductionArrow arrow;
  const char* name;
};

constexpr ArrowInfo kArrows[] = {
    {ReductionArrow::ym3_to_ym2, "3ym_to_2ym"},     {ReductionArrow::ym3_to_ym1, "3ym_to_1ym"},
    {ReductionArrow::ym3_to_elec3, "3ym_to_3elec"}, {ReductionArrow::ym3_to_elec2, "3ym_to_2elec"},
    {ReductionArrow::ym2_to_elec1, "2ym_to_1elec"},
};

void require_dim(const DifferentialTwoCrossedModule& M, Part p, int dim, const char* arrow) {
  const auto& L = *algebra_of(M, p);
  if (L.dim != dim) {
    const char* part = p == Part::g ? "g" : p == Part::h ? "h" : "l";
    throw PreconditionError(std::string("reduction ") + arrow + " needs dim " + part + " = " + std::to_string(dim) +
                            ", instance has " + std::to_string(L.dim));
  }
}

// int over the box of sum_I w_I^T G w_I, which is <w, *w> for the Euclidean star
Rational norm_integral(const Form<Rational>& w, const Matrix& G) {
  PolyAccumulator<Rational> acc;
  for (size_t t = 0; t < w.ntuples(); ++t)
    for (int a = 0; a < w.width; ++a)
      for (int b = 0; b < w.width; ++b)
        if (sgn(G(a, b)) != 0) acc.add(w.at(t, a) * w.at(t, b), G(a, b));
  Form<Rational> top(w.d, w.d, Slot::scalar, 1);
  top.coeffs[0] = acc.finish();
  return integrate_box(top);
}

Rational diff(const Form<Rational>& a, const Form<Rational>& b) { return max_coefficient(a - b); }

}  // namespace

const char* arrow_name(ReductionArrow a) {
  for (const auto& i : kArrows)
    if (i.arrow == a) return i.name;
  return "?";
}

ReductionArrow arrow_from_name(const std::string& s) {
  for (const auto& i : kArrows)
    if (s == i.name) return i.arrow;
  throw ConfigError("unknown reduction arrow '" + s + "'");
}

const std::vector<ReductionArrow>& all_arrows() {
  static const std::vector<ReductionArrow> v = {ReductionArrow::ym3_to_ym2, ReductionArrow::ym3_to_ym1,
                                                ReductionArrow::ym3_to_elec3, ReductionArrow::ym3_to_elec2,
                                                ReductionArrow::ym2_to_elec1};
  return v;
}

void check_arrow_applicable(const DifferentialTwoCrossedModule& M, ReductionArrow a) {
  const char* n = arrow_name(a);
  switch (a) {
    case ReductionArrow::ym3_to_ym2:
      require_dim(M, Part::l, 0, n);
      break;
    case ReductionArrow::ym3_to_ym1:
      require_dim(M, Part::h, 0, n);
      require_dim(M, Part::l, 0, n);
      break;
    case ReductionArrow::ym3_to_elec3:
      require_dim(M, Part::g, 0, n);
      require_dim(M, Part::h, 0, n);
      require_dim(M, Part::l, 1, n);
      break;
    case ReductionArrow::ym3_to_elec2:
      require_dim(M, Part::g, 0, n);
      require_dim(M, Part::l, 0, n);
      require_dim(M, Part::h, 1, n);
      break;
    case ReductionArrow::ym2_to_elec1:
      require_dim(M, Part::h, 0, n);
      require_dim(M, Part::l, 0, n);
      require_dim(M, Part::g, 1, n);
      break;
  }
}

ResidualTriple<Rational> two_form_ym_residuals(const Calculus<Rational>& calc, const ThreeConnection<Rational>& c) {
  const Form<Rational>& A = c.A;
  const Form<Rational>& B = c.B;
  const Form<Rational> F1 = exterior_derivative(A) + calc.self_wedge(A) - calc.alpha(B);
  const Form<Rational> F2 = exterior_derivative(B) + calc.action(A, B);
  const Form<Rational> s1 = hodge(F1), s2 = hodge(F2);
  ResidualTriple<Rational> r;
  r.r1 = exterior_derivative(s1) + calc.bracket(A, s1) - calc.sigma_bar(s2, B);
  r.r2 = exterior_derivative(s2) + calc.action(A, s2) + calc.alpha_star(s1);
  r.r3 = Form<Rational>(A.d, A.d - 3, Slot::l, 0);
  return r;
}

Form<Rational> ym_residual(const Calculus<Rational>& calc, const Form<Rational>& A) {
  const Form<Rational> s = hodge(exterior_derivative(A) + calc.self_wedge(A));
  return exterior_derivative(s) + calc.bracket(A, s);
}

Form<Rational> electro_residual(const Form<Rational>& potential) {
  return exterior_derivative(hodge(exterior_derivative(potential)));
}

std::vector<ReductionComparison> compare_reduction(const Calculus<Rational>& calc, ReductionArrow a,
                                                   const ThreeConnection<Rational>& c) {
  const auto& M = calc.module();
  check_arrow_applicable(M, a);
  const auto& T = calc.triple();
  const auto E = field_eq_residuals(calc, c);
  const Rational S = action(calc, c);
  std::vector<ReductionComparison> out;
  switch (a) {
    case ReductionArrow::ym3_to_ym2: {
      const auto R = two_form_ym_residuals(calc, c);
      out.push_back({"EA", diff(E.r1, R.r1)});
      out.push_back({"EB", diff(E.r2, R.r2)});
      const Form<Rational> F1 = exterior_derivative(c.A) + calc.self_wedge(c.A) - calc.alpha(c.B);
      const Form<Rational> F2 = exterior_derivative(c.B) + calc.action(c.A, c.B);
      out.push_back({"action", abs(S - norm_integral(F1, T.gram_g) - norm_integral(F2, T.gram_h))});
      break;
    }
    case ReductionArrow::ym3_to_ym1:
      out.push_back({"EA", diff(E.r1, ym_residual(calc, c.A))});
      out.push_back({"action", abs(S - norm_integral(exterior_derivative(c.A) + calc.self_wedge(c.A), T.gram_g))});
      break;
    case ReductionArrow::ym3_to_elec3:
      out.push_back({"EC", diff(E.r3, electro_residual(c.C))});
      out.push_back({"action", abs(S - norm_integral(exterior_derivative(c.C), T.gram_l))});
      break;
    case ReductionArrow::ym3_to_elec2:
      out.push_back({"EB", diff(E.r2, electro_residual(c.B))});
      out.push_back({"action", abs(S - norm_integral(exterior_derivative(c.B), T.gram_h))});
      break;
    case ReductionArrow::ym2_to_elec1:
      out.push_back({"EA", diff(E.r1, electro_residual(c.A))});
      out.push_back({"action", abs(S - norm_integral(exterior_derivative(c.A), T.gram_g))});
      break;
  }
  return out;
}

}  // namespace tfym
