#include "tfym/finite_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

namespace tfym {

namespace {

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::deque<int> queue{G.identity()};
  seen[G.identity()] = 1;
  std::vector<int> out;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (int s : gens) {
      const int y = G.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return out;
}

// Extends generator images to a map on all of A along words in the generators.
// `combine(img_x, img_s)` gives the image of x * s. Returns false on inconsistency.
template <class Img, class Combine>
bool extend_from_generators(const FiniteGroup& A, const std::vector<Img>& gen_images, const Img& identity_image,
                            Combine combine, std::vector<Img>& out) {
  const auto& gens = A.generators();
  std::vector<char> set(A.order(), 0);
  out.assign(A.order(), identity_image);
  set[A.identity()] = 1;
  std::deque<int> queue{A.identity()};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      const int y = A.mul(x, gens[i]);
      Img img = combine(out[x], gen_images[i]);
      if (set[y]) {
        if (!(out[y] == img)) return false;
        continue;
      }
      set[y] = 1;
      out[y] = std::move(img);
      queue.push_back(y);
    }
  }
  return true;
}

// Calls f on every vector in prod_i [0, sizes[i]).
void for_each_index(const std::vector<int>& sizes, const std::function<void(const std::vector<int>&)>& f) {
  for (int s : sizes)
    if (s == 0) return;
  std::vector<int> idx(sizes.size(), 0);
  while (true) {
    f(idx);
    size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < sizes[i]) break;
      idx[i] = 0;
    }
    if (i == idx.size()) return;
  }
}

// Actions of G on E by automorphisms, as tables [g * |E| + e].
std::vector<std::vector<int>> actions(const FiniteGroup& G, const FiniteGroup& E) {
  const auto autos = automorphisms(E);
  std::vector<int> ident(E.order());
  for (int e = 0; e < E.order(); ++e) ident[e] = e;
  std::vector<std::vector<int>> out;
  std::vector<int> sizes(G.generators().size(), static_cast<int>(autos.size()));
  for_each_index(sizes, [&](const std::vector<int>& pick) {
    std::vector<std::vector<int>> imgs;
    for (int p : pick) imgs.push_back(autos[p]);
    std::vector<std::vector<int>> per_g;
    auto compose = [&](const std::vector<int>& x, const std::vector<int>& s) {
      std::vector<int> r(E.order());
      for (int e = 0; e < E.order(); ++e) r[e] = x[s[e]];
      return r;
    };
    if (!extend_from_generators(G, imgs, ident, compose, per_g)) return;
    std::vector<int> table;
    for (const auto& m : per_g) table.insert(table.end(), m.begin(), m.end());
    out.push_back(std::move(table));
  });
  return out;
}

bool is_trivial_map(const std::vector<int>& f, const FiniteGroup& target) {
  return std::all_of(f.begin(), f.end(), [&](int x) { return x == target.identity(); });
}

bool is_trivial_action(const std::vector<int>& act, const FiniteGroup& E) {
  for (size_t i = 0; i < act.size(); ++i)
    if (act[i] != static_cast<int>(i % E.order())) return false;
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table) {
  FiniteGroup G;
  G.name_ = std::move(name);
  G.n_ = static_cast<int>(table.size());
  const int n = G.n_;
  if (n == 0) throw ConfigError("group " + G.name_ + ": empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw ConfigError("group " + G.name_ + ": table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw ConfigError("group " + G.name_ + ": entry out of range");
    G.table_.insert(G.table_.end(), row.begin(), row.end());
  }
  G.e_ = -1;
  for (int e = 0; e < n && G.e_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = G.mul(e, x) == x && G.mul(x, e) == x;
    if (ok) G.e_ = e;
  }
  if (G.e_ < 0) throw ConfigError("group " + G.name_ + ": no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          throw ConfigError("group " + G.name_ + ": multiplication is not associative");
  G.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == G.e_ && G.mul(b, a) == G.e_) G.inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (G.inverse_[a] < 0) throw ConfigError("group " + G.name_ + ": element without inverse");
  size_t reached = 1;
  for (int x = 0; x < n && reached < static_cast<size_t>(n); ++x) {
    auto cl = closure(G, G.gens_);
    if (std::find(cl.begin(), cl.end(), x) != cl.end()) continue;
    G.gens_.push_back(x);
    reached = closure(G, G.gens_).size();
  }
  return G;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup trivial_group(const std::string& name) { return FiniteGroup::from_table(name, {{0}}); }

FiniteGroup cyclic_group(const std::string& name, int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(name, t);
}

FiniteGroup symmetric_group3(const std::string& name) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::from_table(name, t);
}

bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != a.order()) return false;
  for (int x : f)
    if (x < 0 || x >= b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

std::vector<std::vector<int>> homomorphisms(const FiniteGroup& A, const FiniteGroup& B) {
  std::vector<std::vector<int>> out;
  std::vector<int> sizes(A.generators().size(), B.order());
  if (sizes.empty()) return {std::vector<int>(A.order(), B.identity())};
  for_each_index(sizes, [&](const std::vector<int>& pick) {
    std::vector<int> f;
    if (!extend_from_generators(A, pick, B.identity(), [&](int x, int s) { return B.mul(x, s); }, f)) return;
    if (is_homomorphism(A, B, f)) out.push_back(std::move(f));
  });
  return out;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& G) {
  std::vector<std::vector<int>> out;
  for (auto& f : homomorphisms(G, G)) {
    std::vector<int> s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) == s.end()) out.push_back(std::move(f));
  }
  return out;
}

void validate_tables(const FiniteTwoCrossedModule& M) {
  const int g = M.G.order(), h = M.H.order(), l = M.L.order();
  auto check = [](const std::vector<int>& v, size_t n, int range, const std::string& what) {
    if (v.size() != n) throw ConfigError(what + ": expected " + std::to_string(n) + " entries");
    for (int x : v)
      if (x < 0 || x >= range) throw ConfigError(what + ": entry out of range");
  };
  check(M.alpha, h, g, "finite.alpha");
  check(M.beta, l, h, "finite.beta");
  check(M.act_h, static_cast<size_t>(g) * h, h, "finite.act_h");
  check(M.act_l, static_cast<size_t>(g) * l, l, "finite.act_l");
  check(M.peiffer, static_cast<size_t>(h) * h, l, "finite.peiffer");
}

AxiomReport finite_axiom_report(const FiniteTwoCrossedModule& M) {
  validate_tables(M);
  const auto &G = M.G, &H = M.H, &L = M.L;
  const int ng = G.order(), nh = H.order(), nl = L.order();
  AxiomReport r;
  auto count = [](auto&& pred, int n1, int n2, int n3) {
    long bad = 0;
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b)
        for (int c = 0; c < n3; ++c)
          if (!pred(a, b, c)) ++bad;
    return Rational(bad);
  };
  r.add("alpha_homomorphism", count([&](int x, int y, int) { return M.a(H.mul(x, y)) == G.mul(M.a(x), M.a(y)); }, nh, nh, 1));
  r.add("beta_homomorphism", count([&](int x, int y, int) { return M.b(L.mul(x, y)) == H.mul(M.b(x), M.b(y)); }, nl, nl, 1));
  r.add("alpha_beta_trivial", count([&](int x, int, int) { return M.a(M.b(x)) == G.identity(); }, nl, 1, 1));
  r.add("action_h_automorphism",
        count([&](int g, int x, int y) { return M.on_h(g, H.mul(x, y)) == H.mul(M.on_h(g, x), M.on_h(g, y)); }, ng, nh, nh));
  r.add("action_h_law", count([&](int g1, int g2, int x) {
          return M.on_h(G.mul(g1, g2), x) == M.on_h(g1, M.on_h(g2, x)) && M.on_h(G.identity(), x) == x;
        }, ng, ng, nh));
  r.add("action_l_automorphism",
        count([&](int g, int x, int y) { return M.on_l(g, L.mul(x, y)) == L.mul(M.on_l(g, x), M.on_l(g, y)); }, ng, nl, nl));
  r.add("action_l_law", count([&](int g1, int g2, int x) {
          return M.on_l(G.mul(g1, g2), x) == M.on_l(g1, M.on_l(g2, x)) && M.on_l(G.identity(), x) == x;
        }, ng, ng, nl));
  r.add("alpha_equivariance",
        count([&](int g, int x, int) { return M.a(M.on_h(g, x)) == G.mul(G.mul(g, M.a(x)), G.inv(g)); }, ng, nh, 1));
  r.add("beta_equivariance", count([&](int g, int x, int) { return M.b(M.on_l(g, x)) == M.on_h(g, M.b(x)); }, ng, nl, 1));
  r.add("peiffer_equivariance", count([&](int g, int x, int y) {
          return M.on_l(g, M.lift(x, y)) == M.lift(M.on_h(g, x), M.on_h(g, y));
        }, ng, nh, nh));
  r.add("hg_peiffer_identity",
        count([&](int x, int y, int) { return M.on_h(M.a(x), y) == H.mul(H.mul(x, y), H.inv(x)); }, nh, nh, 1));
  r.add("peiffer_boundary", count([&](int x, int y, int) {
          // beta{h1,h2} = h1 h2 h1^-1 (alpha(h1) |> h2^-1)
          return M.b(M.lift(x, y)) == H.mul(H.mul(H.mul(x, y), H.inv(x)), M.on_h(M.a(x), H.inv(y)));
        }, nh, nh, 1));
  r.add("peiffer_pair", count([&](int x, int y, int) {
          return M.lift(M.b(x), M.b(y)) == L.mul(L.mul(x, y), L.mul(L.inv(x), L.inv(y)));
        }, nl, nl, 1));
  r.add("prime_action_automorphism",
        count([&](int h, int x, int y) { return M.prime(h, L.mul(x, y)) == L.mul(M.prime(h, x), M.prime(h, y)); }, nh, nl, nl));
  r.add("prime_action_law", count([&](int h1, int h2, int x) {
          return M.prime(H.mul(h1, h2), x) == M.prime(h1, M.prime(h2, x)) && M.prime(H.identity(), x) == x;
        }, nh, nh, nl));
  r.add("lh_equivariance",
        count([&](int h, int x, int) { return M.b(M.prime(h, x)) == H.mul(H.mul(h, M.b(x)), H.inv(h)); }, nh, nl, 1));
  r.add("lh_peiffer_identity",
        count([&](int x, int y, int) { return M.prime(M.b(x), y) == L.mul(L.mul(x, y), L.inv(x)); }, nl, nl, 1));
  return r;
}

namespace {

FiniteTwoCrossedModule assemble(std::string name, FiniteGroup G, FiniteGroup H, FiniteGroup L) {
  FiniteTwoCrossedModule M;
  M.name = std::move(name);
  const int ng = G.order(), nh = H.order(), nl = L.order();
  M.alpha.assign(nh, G.identity());
  M.beta.assign(nl, H.identity());
  for (int g = 0; g < ng; ++g) {
    for (int h = 0; h < nh; ++h) M.act_h.push_back(h);
    for (int l = 0; l < nl; ++l) M.act_l.push_back(l);
  }
  M.peiffer.assign(static_cast<size_t>(nh) * nh, L.identity());
  M.G = std::move(G);
  M.H = std::move(H);
  M.L = std::move(L);
  return M;
}

}  // namespace

FiniteTwoCrossedModule trivial_finite_instance() {
  return assemble("trivial", trivial_group("G"), trivial_group("H"), trivial_group("L"));
}

FiniteTwoCrossedModule cyclic_chain_instance() {
  auto M = assemble("cyclic_chain", cyclic_group("G", 2), cyclic_group("H", 4), cyclic_group("L", 2));
  for (int h = 0; h < 4; ++h) M.alpha[h] = h % 2;
  for (int l = 0; l < 2; ++l) M.beta[l] = (2 * l) % 4;
  return M;
}

FiniteSearchResult search_finite_instance(const FiniteGroup& G, const std::vector<FiniteGroup>& Hs,
                                          const FiniteGroup& L) {
  FiniteSearchResult res;
  bool found = false;
  const auto act_l_all = actions(G, L);
  for (const auto& H : Hs) {
    const auto alphas = homomorphisms(H, G);
    const auto betas = homomorphisms(L, H);
    const auto act_h_all = actions(G, H);
    auto M = assemble("search_" + G.name() + "_" + H.name() + "_" + L.name(), G, H, L);
    for (const auto& al : alphas)
      for (const auto& be : betas) {
        M.alpha = al;
        M.beta = be;
        for (const auto& ah : act_h_all)
          for (const auto& alv : act_l_all) {
            M.act_h = ah;
            M.act_l = alv;
            ++res.candidates;
            if (!finite_axiom_report(M).passed()) continue;
            ++res.valid;
            if (!found && !is_trivial_map(al, G) && !is_trivial_map(be, H) && !is_trivial_action(ah, H)) {
              res.module = M;
              found = true;
            }
          }
      }
  }
  if (!found) throw ConstructionError("finite search: no instance with nontrivial maps and action");
  return res;
}

FiniteTwoCrossedModule s3_search_instance() {
  auto r = search_finite_instance(symmetric_group3("S3"),
                                  {cyclic_group("Z2", 2), cyclic_group("Z3", 3), cyclic_group("Z6", 6),
                                   symmetric_group3("S3")},
                                  cyclic_group("Z2", 2));
  return r.module;
}

}  // namespace tfym
