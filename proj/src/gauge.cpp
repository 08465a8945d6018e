#include "tfym/gauge.hpp"

namespace tfym {

namespace {

Matrix generalized_inverse(const std::optional<Matrix>& given, const Matrix& map, const char* name) {
  if (given) return *given;
  if (map.is_zero()) return Matrix(map.cols, map.rows);
  throw ConstructionError(std::string("fake-flat witness needs a configured inverse for ") + name);
}

}  // namespace

ThreeConnection<Rational> random_connection(const DifferentialTwoCrossedModule& M, int d, std::uint64_t seed,
                                            const RandomFormSpec& spec) {
  Rng ra(derive_seed(seed, 1)), rb(derive_seed(seed, 2)), rc(derive_seed(seed, 3));
  return {random_form(ra, d, 1, Slot::g, M.g->dim, spec.degree_cap, spec.terms, spec.bound),
          random_form(rb, d, 2, Slot::h, M.h->dim, spec.degree_cap, spec.terms, spec.bound),
          random_form(rc, d, 3, Slot::l, M.l->dim, spec.degree_cap, spec.terms, spec.bound)};
}

Form<Rational> random_flat_gauge_field(const DifferentialTwoCrossedModule& M, int d, std::uint64_t seed,
                                       const RandomFormSpec& spec) {
  Form<Rational> A(d, 1, Slot::g, M.g->dim);
  if (M.g->dim == 0) return A;
  Rng rng(derive_seed(seed, 4));
  // one degree higher so dA keeps the requested cap
  Form<Rational> f(d, 0, Slot::g, M.g->dim);
  f.at(0, 0) = random_polynomial(rng, d, spec.degree_cap + 1, spec.terms, spec.bound);
  return exterior_derivative(f);
}

ThreeConnection<Rational> fake_flat_witness(const Calculus<Rational>& calc, const Form<Rational>& A,
                                            const Form<Rational>& b_free, const Form<Rational>& c_free) {
  const auto& M = calc.module();
  const Matrix ra = generalized_inverse(M.alpha_right_inverse, M.alpha, "alpha");
  const Matrix rb = generalized_inverse(M.beta_right_inverse, M.beta, "beta");
  const int d = A.d;
  const Form<Rational> omega1 = exterior_derivative(A) + calc.self_wedge(A);
  const Matrix kernel_part = Matrix::identity(M.h->dim) - ra * M.alpha;
  ThreeConnection<Rational> c;
  c.A = A;
  c.B = apply_linear(ra, omega1, Slot::h) + apply_linear(kernel_part, b_free, Slot::h);
  const Form<Rational> omega2 = exterior_derivative(c.B) + calc.action(A, c.B);
  const Matrix c_kernel_part = Matrix::identity(M.l->dim) - rb * M.beta;
  c.C = M.l->dim ? apply_linear(rb, omega2, Slot::l) + apply_linear(c_kernel_part, c_free, Slot::l)
                 : Form<Rational>(d, 3, Slot::l, 0);
  const auto [flat1, flat2] = is_fake_flat(calc, c);
  if (!flat1) throw ConstructionError("fake-flat witness: dA + A ^ A is not in the image of alpha");
  if (!flat2) throw ConstructionError("fake-flat witness: dB + A ^|> B is not in the image of beta");
  return c;
}

}  // namespace tfym
