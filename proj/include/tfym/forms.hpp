#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tfym/lie_algebra.hpp"
#include "tfym/polynomial.hpp"

namespace tfym {

// Which space the coefficient vectors live in. mat_* hold n x n matrix entries
// of a representation, row-major.
enum class Slot : std::uint8_t { scalar, g, h, l, mat_g, mat_h, mat_l };
const char* slot_name(Slot s);
Slot slot_from_name(const std::string& s);

constexpr int kMaxAmbient = 7;  // one packed variable stays free for the variation parameter

// Index tuples I subset {0..d-1} with |I| = k, as bitmasks in lexicographic order.
struct TupleTable {
  int d = 0, k = 0;
  std::vector<std::uint32_t> masks;
  std::vector<int> index_of;  // by mask, -1 if |mask| != k
};
const TupleTable& tuples(int d, int k);

inline int popcount(std::uint32_t m) { return std::popcount(m); }
// sign of dx_I ^ dx_J relative to dx_{I u J}; 0 when I and J intersect
int shuffle_sign(std::uint32_t I, std::uint32_t J);
std::vector<int> mask_to_indices(std::uint32_t m);

template <class T>
struct Form {
  int d = 0;
  int degree = 0;
  Slot slot = Slot::scalar;
  int width = 1;                     // length of each coefficient vector
  std::vector<Polynomial<T>> coeffs;  // [tuple * width + a]

  Form() = default;
  Form(int d_, int k_, Slot s, int w) : d(d_), degree(k_), slot(s), width(w) {
    if (d_ < 1 || d_ > kMaxAmbient) throw StructuralError("ambient dimension out of range");
    if (k_ < 0) throw StructuralError("negative form degree");
    coeffs.resize(k_ <= d_ ? tuples(d_, k_).masks.size() * static_cast<size_t>(w) : 0);
  }

  size_t ntuples() const { return width == 0 ? 0 : coeffs.size() / width; }
  Polynomial<T>& at(size_t tuple, int a) { return coeffs[tuple * width + a]; }
  const Polynomial<T>& at(size_t tuple, int a) const { return coeffs[tuple * width + a]; }
  std::uint32_t mask(size_t tuple) const { return tuples(d, degree).masks[tuple]; }

  bool is_zero() const {
    for (const auto& p : coeffs)
      if (!p.is_zero()) return false;
    return true;
  }
  bool same_shape(const Form& o) const {
    return d == o.d && degree == o.degree && slot == o.slot && width == o.width;
  }
  bool operator==(const Form& o) const { return same_shape(o) && coeffs == o.coeffs; }

  Form& operator+=(const Form& o) {
    require_same(o, "sum");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Form& operator-=(const Form& o) {
    require_same(o, "difference");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  Form operator-() const {
    Form r = *this;
    for (auto& p : r.coeffs) p = -p;
    return r;
  }
  Form scaled(const T& c) const {
    Form r = *this;
    for (auto& p : r.coeffs) p = p.scaled(c);
    return r;
  }
  Form multiplied(const Polynomial<T>& f) const {
    Form r = *this;
    for (auto& p : r.coeffs) p = p * f;
    return r;
  }

  template <class U>
  Form<U> convert() const {
    Form<U> r(d, degree, slot, width);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i].template convert<U>();
    return r;
  }

  void require_same(const Form& o, const char* what) const {
    if (!same_shape(o)) throw StructuralError(std::string("form ") + what + ": shapes differ");
  }
};

// Largest coefficient magnitude over all polynomials of the form.
template <class T>
T max_coefficient(const Form<T>& w) {
  T m = T(0);
  for (const auto& p : w.coeffs)
    for (const auto& t : p.terms()) {
      T a = Field<T>::magnitude(t.second);
      if (a > m) m = a;
    }
  return m;
}

template <class T>
Form<T> exterior_derivative(const Form<T>& w) {
  Form<T> out(w.d, w.degree + 1, w.slot, w.width);
  if (w.degree + 1 > w.d) return out;
  const auto& tab = tuples(w.d, w.degree + 1);
  for (size_t t = 0; t < w.ntuples(); ++t) {
    const std::uint32_t I = w.mask(t);
    for (int i = 0; i < w.d; ++i) {
      if (I & (1u << i)) continue;
      // dx_i ^ dx_I = (-1)^{#{j in I : j < i}} dx_{I + i}
      const int sign = (std::popcount(I & ((1u << i) - 1)) % 2) ? -1 : 1;
      const int target = tab.index_of[I | (1u << i)];
      for (int a = 0; a < w.width; ++a) {
        const auto& p = w.at(t, a);
        if (p.is_zero()) continue;
        Polynomial<T> dp = p.derivative(i);
        if (sign < 0)
          out.at(target, a) -= dp;
        else
          out.at(target, a) += dp;
      }
    }
  }
  return out;
}

// Euclidean star on R^d, orientation dx_1 ^ ... ^ dx_d: dx_I -> s(I, I^c) dx_{I^c}.
template <class T>
Form<T> hodge(const Form<T>& w) {
  Form<T> out(w.d, w.d - w.degree, w.slot, w.width);
  if (w.degree > w.d) return out;
  const std::uint32_t full = (w.d == 32) ? 0xFFFFFFFFu : ((1u << w.d) - 1);
  const auto& tab = tuples(w.d, w.d - w.degree);
  for (size_t t = 0; t < w.ntuples(); ++t) {
    const std::uint32_t I = w.mask(t), J = full & ~I;
    const int sign = shuffle_sign(I, J);
    const int target = tab.index_of[J];
    for (int a = 0; a < w.width; ++a) out.at(target, a) = sign > 0 ? w.at(t, a) : -w.at(t, a);
  }
  return out;
}

// Sparse bilinear map (a, b) -> sum_k c_k e_k used by every wedge combinator.
template <class T>
struct Bilinear {
  int n1 = 0, n2 = 0, n3 = 0;
  struct Entry {
    int a, b;
    std::vector<std::pair<int, T>> out;
  };
  std::vector<Entry> entries;

  static Bilinear from_tensor(const Tensor3& t) {
    Bilinear B;
    B.n1 = t.n0;
    B.n2 = t.n1;
    B.n3 = t.n2;
    for (int a = 0; a < t.n0; ++a)
      for (int b = 0; b < t.n1; ++b) {
        Entry e{a, b, {}};
        for (int k = 0; k < t.n2; ++k)
          if (sgn(t(a, b, k)) != 0) e.out.emplace_back(k, Field<T>::from(t(a, b, k)));
        if (!e.out.empty()) B.entries.push_back(std::move(e));
      }
    return B;
  }
};

// sum over (I, J) of sign(I, J) * w1_I^a * w2_J^b * t(a, b, .)
template <class T>
Form<T> wedge_bilinear(const Form<T>& w1, const Form<T>& w2, const Bilinear<T>& t, Slot out_slot,
                       const Truncation& tr = {}) {
  if (w1.d != w2.d) throw StructuralError("wedge: ambient dimensions differ");
  if (w1.width != t.n1 || w2.width != t.n2) throw StructuralError("wedge: algebra dimensions do not match combinator");
  Form<T> out(w1.d, w1.degree + w2.degree, out_slot, t.n3);
  if (w1.degree + w2.degree > w1.d || t.entries.empty()) return out;
  const auto& tab = tuples(out.d, out.degree);
  std::vector<PolyAccumulator<T>> acc(out.coeffs.size());
  for (size_t i = 0; i < w1.ntuples(); ++i) {
    const std::uint32_t I = w1.mask(i);
    for (size_t j = 0; j < w2.ntuples(); ++j) {
      const std::uint32_t J = w2.mask(j);
      if (I & J) continue;
      const int sign = shuffle_sign(I, J);
      const size_t target = static_cast<size_t>(tab.index_of[I | J]);
      for (const auto& e : t.entries) {
        const auto& p = w1.at(i, e.a);
        if (p.is_zero()) continue;
        const auto& q = w2.at(j, e.b);
        if (q.is_zero()) continue;
        Polynomial<T> pq = Polynomial<T>::multiply(p, q, tr);
        for (const auto& [k, c] : e.out) {
          T s = c;
          if (sign < 0) s = -s;
          acc[target * out.width + k].add(pq, s);
        }
      }
    }
  }
  for (size_t c = 0; c < acc.size(); ++c) out.coeffs[c] = acc[c].finish();
  return out;
}

// Componentwise linear map: out^k = sum_a m(k, a) w^a.
template <class T>
Form<T> apply_linear(const Matrix& m, const Form<T>& w, Slot out_slot) {
  if (m.cols != w.width) throw StructuralError("linear map: algebra dimension mismatch");
  Form<T> out(w.d, w.degree, out_slot, m.rows);
  for (size_t t = 0; t < w.ntuples(); ++t)
    for (int k = 0; k < m.rows; ++k) {
      PolyAccumulator<T> acc;
      for (int a = 0; a < m.cols; ++a)
        if (sgn(m(k, a)) != 0 && !w.at(t, a).is_zero()) acc.add(w.at(t, a), Field<T>::from(m(k, a)));
      out.at(t, k) = acc.finish();
    }
  return out;
}

// Exact integral over [0,1]^d of a top-degree scalar form. Variables beyond the
// first d are left symbolic, so the result is a polynomial in them.
template <class T>
Polynomial<T> integrate_box_partial(const Form<T>& w) {
  if (w.degree != w.d) throw StructuralError("integrate_box: form degree must equal the ambient dimension");
  if (w.width != 1) throw StructuralError("integrate_box: expected a scalar form");
  std::vector<typename Polynomial<T>::Term> out;
  for (const auto& [m, c] : w.coeffs[0].terms()) {
    T v = c;
    Monomial rest = m;
    for (int i = 0; i < w.d; ++i) {
      v /= T(exponent(m, i) + 1);
      rest = with_exponent(rest, i, 0);
    }
    out.emplace_back(rest, v);
  }
  return Polynomial<T>::from_terms(std::move(out));
}

template <class T>
T integrate_box(const Form<T>& w) {
  Polynomial<T> p = integrate_box_partial(w);
  for (const auto& [m, c] : p.terms())
    if (m != 0) throw StructuralError("integrate_box: integrand depends on non-ambient variables");
  return p.coefficient(0);
}

// Gauss-Legendre nodes and weights on [0,1] with n points (exact to degree 2n-1).
void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Tensor-product Gauss-Legendre integral of a top form over [0,1]^d in double precision,
// with enough points per axis to be exact for the polynomial degrees present.
double integrate_box_quadrature(const Form<Rational>& w);

// Random form with every component drawn by random_polynomial.
Form<Rational> random_form(Rng& rng, int d, int k, Slot slot, int width, int degree_cap, int terms, int bound);

// Text serialization: one record per (tuple, basis index, monomial):
//   form <name> <slot> <degree> <d> <width>
//   <i1,i2,..|-> <basis> <e1,...,ed> <p/q>
//   end
struct NamedForm {
  std::string name;
  Form<Rational> form;
};
std::string serialize_forms(const std::vector<NamedForm>& forms);
std::vector<NamedForm> parse_forms(const std::string& text);

}  // namespace tfym
