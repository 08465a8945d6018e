#pragma once

// Naive reference implementation of the form calculus: polynomials as maps from
// exponent vectors, forms as maps from sorted index lists, signs found by sorting.
// Shares nothing with the packed kernels beyond reading their output.

#include <algorithm>
#include <map>
#include <vector>

#include "tfym/forms.hpp"

namespace oracle {

using tfym::Matrix;
using tfym::Rational;
using tfym::Tensor3;

using Exps = std::vector<int>;
using Poly = std::map<Exps, Rational>;
using Index = std::vector<int>;

struct OForm {
  int d = 0, k = 0, width = 0;
  std::map<Index, std::vector<Poly>> comps;
};

inline void add_to(Poly& p, const Exps& e, const Rational& c) {
  Rational& slot = p[e];
  slot += c;
  if (sgn(slot) == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_to(r, e, ca * cb);
    }
  return r;
}

inline Poly partial(const Poly& p, int var) {
  Poly r;
  for (const auto& [e, c] : p)
    if (e[var] > 0) {
      Exps f = e;
      f[var] -= 1;
      add_to(r, f, c * e[var]);
    }
  return r;
}

// Sorts idx in place by adjacent swaps; returns the permutation sign, 0 on a repeat.
inline int sort_sign(Index& idx) {
  int sign = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return 0;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j] == idx[j + 1]) return 0;
  return sign;
}

inline void add_comp(OForm& f, const Index& I, int a, const Poly& p, const Rational& scale) {
  auto& v = f.comps[I];
  if (v.empty()) v.resize(f.width);
  for (const auto& [e, c] : p) add_to(v[a], e, c * scale);
}

inline OForm from(const tfym::Form<Rational>& w) {
  OForm f{w.d, w.degree, w.width, {}};
  for (size_t t = 0; t < w.ntuples(); ++t) {
    const Index I = tfym::mask_to_indices(w.mask(t));
    for (int a = 0; a < w.width; ++a)
      for (const auto& [m, c] : w.at(t, a).terms()) {
        Exps e(w.d);
        for (int i = 0; i < w.d; ++i) e[i] = tfym::exponent(m, i);
        Poly p;
        p[e] = c;
        add_comp(f, I, a, p, Rational(1));
      }
  }
  return f;
}

// Drops empty polynomials and components so equal forms compare equal.
inline OForm canonical(OForm f) {
  for (auto it = f.comps.begin(); it != f.comps.end();) {
    bool empty = std::all_of(it->second.begin(), it->second.end(), [](const Poly& p) { return p.empty(); });
    it = empty ? f.comps.erase(it) : std::next(it);
  }
  return f;
}

inline bool same(const OForm& a, const OForm& b) {
  return a.d == b.d && a.k == b.k && a.width == b.width && canonical(a).comps == canonical(b).comps;
}

inline bool same(const OForm& a, const tfym::Form<Rational>& b) { return same(a, from(b)); }

inline OForm d(const OForm& w) {
  OForm r{w.d, w.k + 1, w.width, {}};
  for (const auto& [I, v] : w.comps)
    for (int i = 0; i < w.d; ++i) {
      Index J = {i};
      J.insert(J.end(), I.begin(), I.end());
      const int s = sort_sign(J);
      if (s == 0) continue;
      for (int a = 0; a < w.width; ++a) add_comp(r, J, a, partial(v[a], i), Rational(s));
    }
  return r;
}

inline OForm hodge(const OForm& w) {
  OForm r{w.d, w.d - w.k, w.width, {}};
  for (const auto& [I, v] : w.comps) {
    Index comp;
    for (int i = 0; i < w.d; ++i)
      if (std::find(I.begin(), I.end(), i) == I.end()) comp.push_back(i);
    Index all = I;
    all.insert(all.end(), comp.begin(), comp.end());
    const int s = sort_sign(all);
    for (int a = 0; a < w.width; ++a) add_comp(r, comp, a, v[a], Rational(s));
  }
  return r;
}

// sum over components of w1^a ^ w2^b t(a, b, .)
inline OForm wedge(const OForm& w1, const OForm& w2, const Tensor3& t) {
  OForm r{w1.d, w1.k + w2.k, t.n2, {}};
  for (const auto& [I, v1] : w1.comps)
    for (const auto& [J, v2] : w2.comps) {
      Index K = I;
      K.insert(K.end(), J.begin(), J.end());
      const int s = sort_sign(K);
      if (s == 0) continue;
      for (int a = 0; a < t.n0; ++a)
        for (int b = 0; b < t.n1; ++b) {
          if (v1[a].empty() || v2[b].empty()) continue;
          const Poly p = mul(v1[a], v2[b]);
          for (int k = 0; k < t.n2; ++k)
            if (sgn(t(a, b, k)) != 0) add_comp(r, K, k, p, t(a, b, k) * s);
        }
    }
  return r;
}

inline OForm linear(const Matrix& m, const OForm& w) {
  OForm r{w.d, w.k, m.rows, {}};
  for (const auto& [I, v] : w.comps)
    for (int k = 0; k < m.rows; ++k)
      for (int a = 0; a < m.cols; ++a)
        if (sgn(m(k, a)) != 0) add_comp(r, I, k, v[a], m(k, a));
  return r;
}

inline OForm sum(const OForm& a, const OForm& b, const Rational& sb = 1) {
  OForm r = a;
  for (const auto& [I, v] : b.comps)
    for (int i = 0; i < b.width; ++i) add_comp(r, I, i, v[i], sb);
  return r;
}

// Gram matrix as a (n, n, 1) tensor, for pairings
inline Tensor3 gram_tensor(const Matrix& G) {
  Tensor3 t(G.rows, G.cols, 1);
  for (int a = 0; a < G.rows; ++a)
    for (int b = 0; b < G.cols; ++b) t(a, b, 0) = G(a, b);
  return t;
}

inline Rational integrate(const OForm& top) {
  Rational s = 0;
  for (const auto& [I, v] : top.comps)
    for (const auto& [e, c] : v[0]) {
      Rational term = c;
      for (int x : e) term /= (x + 1);
      s += term;
    }
  return s;
}

}  // namespace oracle
