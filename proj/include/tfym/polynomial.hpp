#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tfym/rational.hpp"

namespace tfym {

// Exponent vector packed one byte per variable: variable i lives in bits 8i..8i+7.
using Monomial = std::uint64_t;
constexpr int kMaxVars = 8;
constexpr int kMaxExponent = 255;

inline int exponent(Monomial m, int i) { return static_cast<int>((m >> (8 * i)) & 0xFF); }
inline Monomial with_exponent(Monomial m, int i, int e) {
  return (m & ~(Monomial(0xFF) << (8 * i))) | (Monomial(e) << (8 * i));
}
inline Monomial var_monomial(int i, int e = 1) { return Monomial(e) << (8 * i); }
inline int total_degree(Monomial m) {
  int s = 0;
  for (int i = 0; i < kMaxVars; ++i) s += exponent(m, i);
  return s;
}
// Per-variable maxima, used to guard packed addition against carries.
inline Monomial exponent_max(Monomial a, Monomial b) {
  Monomial r = 0;
  for (int i = 0; i < kMaxVars; ++i) r = with_exponent(r, i, std::max(exponent(a, i), exponent(b, i)));
  return r;
}

// Truncation of products in one variable: terms with exponent > order are dropped.
struct Truncation {
  int var = -1;
  int order = 0;
  bool keeps(Monomial m) const { return var < 0 || exponent(m, var) <= order; }
};

template <class T>
class Polynomial {
 public:
  using Term = std::pair<Monomial, T>;

  Polynomial() = default;
  static Polynomial constant(const T& c) {
    Polynomial p;
    if (!Field<T>::is_zero(c)) p.terms_.push_back({0, c});
    return p;
  }
  static Polynomial monomial(Monomial m, const T& c) {
    Polynomial p;
    if (!Field<T>::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(int i) { return monomial(var_monomial(i), T(1)); }
  // Builds from arbitrary terms (duplicates merged, zeros dropped).
  static Polynomial from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  T coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return T(0);
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, tfym::total_degree(t.first));
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, exponent(t.first, var));
    return d;
  }
  Monomial max_exponents() const {
    Monomial r = 0;
    for (const auto& t : terms_) r = exponent_max(r, t.first);
    return r;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    merge(o, false);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    merge(o, true);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial scaled(const T& c) const {
    if (Field<T>::is_zero(c)) return {};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b, Truncation{}); }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b, const Truncation& tr) {
    if (a.is_zero() || b.is_zero()) return {};
    check_product(a, b);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        Monomial m = x.first + y.first;
        if (!tr.keeps(m)) continue;
        out.emplace_back(m, x.second * y.second);
      }
    return from_terms(std::move(out));
  }

  Polynomial derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int e = exponent(t.first, var);
      if (e == 0) continue;
      out.emplace_back(with_exponent(t.first, var, e - 1), t.second * T(e));
    }
    return from_terms(std::move(out));
  }

  // Substitutes x_var = value.
  Polynomial substitute(int var, const T& value) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int e = exponent(t.first, var);
      T c = t.second;
      for (int k = 0; k < e; ++k) c *= value;
      out.emplace_back(with_exponent(t.first, var, 0), c);
    }
    return from_terms(std::move(out));
  }

  // Keeps only terms whose exponent in var equals e, and removes that variable.
  Polynomial coefficient_of(int var, int e) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (exponent(t.first, var) == e) out.emplace_back(with_exponent(t.first, var, 0), t.second);
    return from_terms(std::move(out));
  }

  template <class U>
  U evaluate(const std::vector<U>& x) const {
    U s = U(0);
    for (const auto& t : terms_) {
      U v = to_field<U>(t.second);
      for (int i = 0; i < kMaxVars; ++i) {
        int e = exponent(t.first, i);
        for (int k = 0; k < e; ++k) v *= x.at(i);
      }
      s += v;
    }
    return s;
  }

  template <class U>
  Polynomial<U> convert() const {
    std::vector<std::pair<Monomial, U>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, to_field<U>(t.second));
    return Polynomial<U>::from_terms(std::move(out));
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  template <class U>
  static U to_field(const T& v) {
    if constexpr (std::is_same_v<T, U>)
      return v;
    else if constexpr (std::is_same_v<T, Rational>)
      return Field<U>::from(v);
    else
      return static_cast<U>(v);
  }

  static void check_product(const Polynomial& a, const Polynomial& b) {
    Monomial ma = a.max_exponents(), mb = b.max_exponents();
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(ma, i) + exponent(mb, i) > kMaxExponent) throw StructuralError("polynomial exponent overflow");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    size_t w = 0;
    for (size_t r = 0; r < terms_.size();) {
      Monomial m = terms_[r].first;
      T c = std::move(terms_[r].second);
      size_t s = r + 1;
      while (s < terms_.size() && terms_[s].first == m) c += terms_[s++].second;
      if (!Field<T>::is_zero(c)) {
        terms_[w].first = m;
        terms_[w].second = std::move(c);
        ++w;
      }
      r = s;
    }
    terms_.resize(w);
  }

  void merge(const Polynomial& o, bool subtract) {
    if (o.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, subtract ? T(-o.terms_[j].second) : o.terms_[j].second);
        ++j;
      } else {
        T c = std::move(terms_[i].second);
        if (subtract)
          c -= o.terms_[j].second;
        else
          c += o.terms_[j].second;
        if (!Field<T>::is_zero(c)) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

// Accumulates scaled products into one polynomial with a single final sort.
template <class T>
class PolyAccumulator {
 public:
  void add(const Polynomial<T>& p, const T& scale) {
    for (const auto& t : p.terms()) {
      auto [it, fresh] = map_.try_emplace(t.first, t.second * scale);
      if (!fresh) it->second += t.second * scale;
    }
  }
  void add(const Polynomial<T>& p) {
    for (const auto& t : p.terms()) {
      auto [it, fresh] = map_.try_emplace(t.first, t.second);
      if (!fresh) it->second += t.second;
    }
  }
  bool empty() const { return map_.empty(); }
  Polynomial<T> finish() {
    std::vector<typename Polynomial<T>::Term> terms;
    terms.reserve(map_.size());
    for (auto& kv : map_) terms.emplace_back(kv.first, std::move(kv.second));
    map_.clear();
    return Polynomial<T>::from_terms(std::move(terms));
  }

 private:
  std::unordered_map<Monomial, T> map_;
};

// Random polynomial in x_0..x_{nvars-1}: `terms` monomials of total degree <= cap.
Polynomial<Rational> random_polynomial(Rng& rng, int nvars, int degree_cap, int terms, int bound);

// Product over i < nvars of x_i (1 - x_i).
Polynomial<Rational> bump_polynomial(int nvars);

}  // namespace tfym
