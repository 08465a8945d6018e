#include "tfym/forms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace tfym {

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::scalar: return "scalar";
    case Slot::g: return "g";
    case Slot::h: return "h";
    case Slot::l: return "l";
    case Slot::mat_g: return "mat_g";
    case Slot::mat_h: return "mat_h";
    case Slot::mat_l: return "mat_l";
  }
  return "?";
}

Slot slot_from_name(const std::string& s) {
  for (Slot x : {Slot::scalar, Slot::g, Slot::h, Slot::l, Slot::mat_g, Slot::mat_h, Slot::mat_l})
    if (s == slot_name(x)) return x;
  throw StructuralError("unknown form slot '" + s + "'");
}

const TupleTable& tuples(int d, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, TupleTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({d, k});
  if (it != cache.end()) return it->second;
  TupleTable t;
  t.d = d;
  t.k = k;
  t.index_of.assign(size_t(1) << d, -1);
  // enumerate k-subsets in lexicographic order of their sorted index lists
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (k <= d) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    t.index_of[m] = static_cast<int>(t.masks.size());
    t.masks.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[p] == d - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return cache.emplace(std::make_pair(d, k), std::move(t)).first->second;
}

int shuffle_sign(std::uint32_t I, std::uint32_t J) {
  if (I & J) return 0;
  int inversions = 0;
  for (std::uint32_t rest = I; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    inversions += std::popcount(J & ((1u << i) - 1));
  }
  return (inversions % 2) ? -1 : 1;
}

std::vector<int> mask_to_indices(std::uint32_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Polynomial<Rational> random_polynomial(Rng& rng, int nvars, int degree_cap, int terms, int bound) {
  if (nvars < 0 || nvars > kMaxVars) throw StructuralError("random_polynomial: too many variables");
  std::vector<Polynomial<Rational>::Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m = 0;
    if (nvars > 0) {
      const int deg = static_cast<int>(rng.uniform(0, degree_cap));
      for (int s = 0; s < deg; ++s) {
        const int v = static_cast<int>(rng.uniform(0, nvars - 1));
        m = with_exponent(m, v, exponent(m, v) + 1);
      }
    }
    out.emplace_back(m, rng.nonzero_rational(bound));
  }
  return Polynomial<Rational>::from_terms(std::move(out));
}

Polynomial<Rational> bump_polynomial(int nvars) {
  auto p = Polynomial<Rational>::constant(Rational(1));
  for (int i = 0; i < nvars; ++i) {
    auto x = Polynomial<Rational>::variable(i);
    p = p * (x - x * x);
  }
  return p;
}

void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
    }
    // map [-1,1] -> [0,1]
    nodes[i] = 0.5 * (1 - x);
    weights[i] = 1.0 / ((1 - x * x) * dp * dp);
  }
}

double integrate_box_quadrature(const Form<Rational>& w) {
  if (w.degree != w.d) throw StructuralError("integrate_box: form degree must equal the ambient dimension");
  if (w.width != 1) throw StructuralError("integrate_box: expected a scalar form");
  const auto& p = w.coeffs[0];
  if (p.is_zero()) return 0.0;
  std::vector<std::vector<double>> nodes(w.d), weights(w.d);
  const Monomial mx = p.max_exponents();
  for (int i = 0; i < w.d; ++i) gauss_legendre01(exponent(mx, i) / 2 + 1, nodes[i], weights[i]);
  const auto pd = p.convert<double>();
  std::vector<int> pos(w.d, 0);
  std::vector<double> x(kMaxVars, 0.0);
  double total = 0;
  while (true) {
    double wt = 1;
    for (int i = 0; i < w.d; ++i) {
      x[i] = nodes[i][pos[i]];
      wt *= weights[i][pos[i]];
    }
    total += wt * pd.evaluate(x);
    int i = 0;
    for (; i < w.d; ++i) {
      if (++pos[i] < static_cast<int>(nodes[i].size())) break;
      pos[i] = 0;
    }
    if (i == w.d) break;
  }
  return total;
}

Form<Rational> random_form(Rng& rng, int d, int k, Slot slot, int width, int degree_cap, int terms, int bound) {
  Form<Rational> f(d, k, slot, width);
  for (auto& p : f.coeffs) p = random_polynomial(rng, d, degree_cap, terms, bound);
  return f;
}

std::string serialize_forms(const std::vector<NamedForm>& forms) {
  std::ostringstream os;
  for (const auto& nf : forms) {
    const auto& f = nf.form;
    os << "form " << nf.name << ' ' << slot_name(f.slot) << ' ' << f.degree << ' ' << f.d << ' ' << f.width << '\n';
    for (size_t t = 0; t < f.ntuples(); ++t) {
      std::string tuple;
      for (int i : mask_to_indices(f.mask(t))) tuple += (tuple.empty() ? "" : ",") + std::to_string(i + 1);
      if (tuple.empty()) tuple = "-";
      for (int a = 0; a < f.width; ++a)
        for (const auto& [m, c] : f.at(t, a).terms()) {
          os << tuple << ' ' << (a + 1) << ' ';
          for (int i = 0; i < f.d; ++i) os << (i ? "," : "") << exponent(m, i);
          os << ' ' << to_string(c) << '\n';
        }
    }
    os << "end\n";
  }
  return os.str();
}

namespace {

std::vector<int> split_ints(const std::string& s, int line) {
  std::vector<int> out;
  if (s == "-") return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("forms line " + std::to_string(line) + ": bad integer list '" + s + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<NamedForm> parse_forms(const std::string& text) {
  std::vector<NamedForm> out;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  NamedForm* cur = nullptr;
  std::vector<std::vector<Polynomial<Rational>::Term>> pending;
  auto fail = [&](const std::string& what) -> ConfigError {
    return ConfigError("forms line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(is, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "form") {
      if (cur) throw fail("nested form record");
      std::string name, slot;
      int k = 0, d = 0, w = 0;
      if (!(ls >> name >> slot >> k >> d >> w)) throw fail("malformed form header");
      try {
        out.push_back({name, Form<Rational>(d, k, slot_from_name(slot), w)});
      } catch (const StructuralError& e) {
        throw fail(e.what());
      }
      cur = &out.back();
      pending.assign(cur->form.coeffs.size(), {});
      continue;
    }
    if (head == "end") {
      if (!cur) throw fail("'end' outside a form record");
      for (size_t i = 0; i < pending.size(); ++i)
        cur->form.coeffs[i] = Polynomial<Rational>::from_terms(std::move(pending[i]));
      cur = nullptr;
      continue;
    }
    if (!cur) throw fail("record outside a form");
    std::string basis, exps, coef;
    if (!(ls >> basis >> exps >> coef)) throw fail("expected '<tuple> <basis> <exponents> <coefficient>'");
    const auto& f = cur->form;
    std::uint32_t mask = 0;
    int prev = 0;
    for (int i : split_ints(head, line)) {
      if (i <= prev || i > f.d) throw fail("index tuple must be strictly increasing within 1.." + std::to_string(f.d));
      mask |= 1u << (i - 1);
      prev = i;
    }
    if (popcount(mask) != f.degree) throw fail("index tuple length differs from the form degree");
    const auto b = split_ints(basis, line);
    if (b.size() != 1 || b[0] < 1 || b[0] > f.width) throw fail("basis index out of range");
    const auto e = split_ints(exps, line);
    if (static_cast<int>(e.size()) != f.d) throw fail("exponent vector must have " + std::to_string(f.d) + " entries");
    Monomial m = 0;
    for (int i = 0; i < f.d; ++i) {
      if (e[i] < 0 || e[i] > kMaxExponent) throw fail("exponent out of range");
      m = with_exponent(m, i, e[i]);
    }
    Rational c;
    try {
      c = parse_rational(coef);
    } catch (const Error& ex) {
      throw fail(ex.what());
    }
    const size_t t = static_cast<size_t>(tuples(f.d, f.degree).index_of[mask]);
    pending[t * f.width + (b[0] - 1)].emplace_back(m, c);
  }
  if (cur) throw ConfigError("forms: unterminated record '" + cur->name + "'");
  return out;
}

}  // namespace tfym
