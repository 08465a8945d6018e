#include "tfym/pointwise.hpp"

#include <algorithm>
#include <array>

namespace tfym {

namespace {

struct DoublePoly {
  std::vector<std::pair<Monomial, double>> terms;
};

struct Sampled {
  int width = 0;
  std::vector<DoublePoly> polys;
};

Sampled sample(const Form<Rational>& w) {
  Sampled s;
  s.width = w.width;
  s.polys.resize(w.coeffs.size());
  for (size_t i = 0; i < w.coeffs.size(); ++i)
    for (const auto& [m, c] : w.coeffs[i].terms()) s.polys[i].terms.emplace_back(m, c.get_d());
  return s;
}

int max_exponent(const Form<Rational>& w) {
  int e = 0;
  for (const auto& p : w.coeffs) {
    const Monomial m = p.max_exponents();
    for (int i = 0; i < w.d; ++i) e = std::max(e, exponent(m, i));
  }
  return e;
}

// pw[i][e] = x_i^e
void evaluate(const Sampled& s, const std::vector<std::vector<double>>& pw, int d, std::vector<double>& out) {
  out.assign(s.polys.size(), 0.0);
  for (size_t i = 0; i < s.polys.size(); ++i) {
    double acc = 0;
    for (const auto& [m, c] : s.polys[i].terms) {
      double v = c;
      for (int a = 0; a < d; ++a) v *= pw[a][exponent(m, a)];
      acc += v;
    }
    out[i] = acc;
  }
}

struct WedgePlan {
  struct Item {
    int i, j, out;
    double sign;
  };
  std::vector<Item> items;
};

WedgePlan plan(int d, int k1, int k2) {
  WedgePlan p;
  if (k1 + k2 > d) return p;
  const auto& t1 = tuples(d, k1);
  const auto& t2 = tuples(d, k2);
  const auto& to = tuples(d, k1 + k2);
  for (size_t i = 0; i < t1.masks.size(); ++i)
    for (size_t j = 0; j < t2.masks.size(); ++j) {
      const auto I = t1.masks[i], J = t2.masks[j];
      if (I & J) continue;
      p.items.push_back({static_cast<int>(i), static_cast<int>(j), to.index_of[I | J],
                         static_cast<double>(shuffle_sign(I, J))});
    }
  return p;
}

struct Sparse3 {
  struct Entry {
    int a, b, k;
    double c;
  };
  std::vector<Entry> nz;
};

Sparse3 sparse(const Tensor3& t) {
  Sparse3 s;
  for (int a = 0; a < t.n0; ++a)
    for (int b = 0; b < t.n1; ++b)
      for (int k = 0; k < t.n2; ++k)
        if (sgn(t(a, b, k)) != 0) s.nz.push_back({a, b, k, t(a, b, k).get_d()});
  return s;
}

// out += scale * x ^_t y
void wedge(const WedgePlan& p, const std::vector<double>& x, int wx, const std::vector<double>& y, int wy,
           const Sparse3& t, int wo, double scale, std::vector<double>& out) {
  for (const auto& it : p.items)
    for (const auto& e : t.nz) out[it.out * wo + e.k] += scale * it.sign * e.c * x[it.i * wx + e.a] * y[it.j * wy + e.b];
}

struct DenseMap {
  int rows = 0, cols = 0;
  std::vector<double> v;
};

DenseMap dense_map(const Matrix& m) {
  DenseMap r{m.rows, m.cols, {}};
  for (const auto& q : m.v) r.v.push_back(q.get_d());
  return r;
}

// out += scale * m x, per tuple
void linear(const DenseMap& m, const std::vector<double>& x, double scale, std::vector<double>& out) {
  if (m.cols == 0 || m.rows == 0) return;
  const size_t nt = x.size() / m.cols;
  for (size_t t = 0; t < nt; ++t)
    for (int k = 0; k < m.rows; ++k) {
      double s = 0;
      for (int a = 0; a < m.cols; ++a) s += m.v[k * m.cols + a] * x[t * m.cols + a];
      out[t * m.rows + k] += scale * s;
    }
}

// sum_I f_I^T G f_I, the density of <f, *f> for the Euclidean star
double norm_density(const std::vector<double>& f, const std::vector<double>& G, int w) {
  if (w == 0) return 0;
  double s = 0;
  const size_t nt = f.size() / w;
  for (size_t t = 0; t < nt; ++t)
    for (int a = 0; a < w; ++a) {
      const double fa = f[t * w + a];
      if (fa == 0) continue;
      for (int b = 0; b < w; ++b) s += fa * G[a * w + b] * f[t * w + b];
    }
  return s;
}


}  // namespace

std::vector<double> pointwise_actions(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                                      const ThreeConnection<Rational>& c, const ThreeConnection<Rational>& v,
                                      const std::vector<double>& shifts) {
  const int d = c.dim();
  if (v.dim() != d) throw StructuralError("pointwise action: connection and variation dimensions differ");
  const int wg = M.g->dim, wh = M.h->dim, wl = M.l->dim;

  const std::array<const Form<Rational>*, 6> src = {&c.A, &c.B, &c.C, &v.A, &v.B, &v.C};
  std::array<Sampled, 12> smp;  // c parts, v parts, then their derivatives
  int D = 0;
  for (int i = 0; i < 6; ++i) {
    smp[i] = sample(*src[i]);
    smp[6 + i] = sample(exterior_derivative(*src[i]));
    D = std::max(D, max_exponent(*src[i]));
  }
  // curvature components have per-variable degree <= 2D, the Lagrangian <= 4D
  const int n = 2 * D + 1;
  std::vector<double> x1, w1;
  gauss_legendre01(n, x1, w1);

  const WedgePlan p11 = plan(d, 1, 1), p12 = plan(d, 1, 2), p13 = plan(d, 1, 3), p22 = plan(d, 2, 2);
  const Sparse3 br = sparse(M.g->structure), ah = sparse(M.act_h), al = sparse(M.act_l), pf = sparse(M.peiffer);
  const std::vector<double> Gg = dense_map(T.gram_g).v, Gh = dense_map(T.gram_h).v, Gl = dense_map(T.gram_l).v;
  const DenseMap alpha = dense_map(M.alpha), beta = dense_map(M.beta);

  std::vector<long double> sums(shifts.size(), 0.0L);
  std::vector<std::vector<double>> pw(d, std::vector<double>(D + 1, 1.0));
  std::array<std::vector<double>, 12> val;
  std::vector<double> a, b, cc, da, db, dc, f1, f2, o3;
  std::vector<int> idx(d, 0);
  while (true) {
    double weight = 1;
    for (int i = 0; i < d; ++i) {
      weight *= w1[idx[i]];
      for (int e = 1; e <= D; ++e) pw[i][e] = pw[i][e - 1] * x1[idx[i]];
    }
    for (int i = 0; i < 12; ++i) evaluate(smp[i], pw, d, val[i]);
    for (size_t s = 0; s < shifts.size(); ++s) {
      const double h = shifts[s];
      auto comb = [&](int i, std::vector<double>& out) {
        out = val[i];
        for (size_t k = 0; k < out.size(); ++k) out[k] += h * val[i + 3][k];
      };
      comb(0, a);
      comb(1, b);
      comb(2, cc);
      comb(6, da);
      comb(7, db);
      comb(8, dc);
      f1 = da;
      wedge(p11, a, wg, a, wg, br, wg, 0.5, f1);
      linear(alpha, b, -1.0, f1);
      f2 = db;
      wedge(p12, a, wg, b, wh, ah, wh, 1.0, f2);
      linear(beta, cc, -1.0, f2);
      o3 = dc;
      wedge(p13, a, wg, cc, wl, al, wl, 1.0, o3);
      wedge(p22, b, wh, b, wh, pf, wl, 1.0, o3);
      sums[s] += weight * (norm_density(f1, Gg, wg) + norm_density(f2, Gh, wh) + norm_density(o3, Gl, wl));
    }
    int i = 0;
    while (i < d && ++idx[i] == n) idx[i++] = 0;
    if (i == d) break;
  }
  return {sums.begin(), sums.end()};
}

double pointwise_action(const DifferentialTwoCrossedModule& M, const InvariantFormTriple& T,
                        const ThreeConnection<Rational>& c) {
  const int d = c.dim();
  const ThreeConnection<Rational> zero{Form<Rational>(d, 1, Slot::g, M.g->dim), Form<Rational>(d, 2, Slot::h, M.h->dim),
                                       Form<Rational>(d, 3, Slot::l, M.l->dim)};
  return pointwise_actions(M, T, c, zero, {0.0})[0];
}

}  // namespace tfym
