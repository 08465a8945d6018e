#include "tfym/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json_format.hpp"

namespace tfym {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ConfigError(path + ": " + what); }

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at_index(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  const std::set<std::string> ok(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) fail(join(path, it.key()), "unknown field");
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing required field");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long long get_int(const json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi) fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Rational get_rational(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational as a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

const json& get_array(const json& j, const std::string& path, std::optional<size_t> size = std::nullopt) {
  if (!j.is_array()) fail(path, "expected a list");
  if (size && j.size() != *size)
    fail(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

Matrix get_matrix(const json& j, int rows, int cols, const std::string& path) {
  get_array(j, path, static_cast<size_t>(rows));
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::string rp = at_index(path, r);
    get_array(j[r], rp, static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) m(r, c) = get_rational(j[r][c], at_index(rp, c));
  }
  return m;
}

// [i, j, k, "c"] entries. With antisymmetric set, [j, i, k] = -c is implied.
Tensor3 get_tensor(const json& j, int n0, int n1, int n2, const std::string& path, bool antisymmetric) {
  get_array(j, path);
  Tensor3 t(n0, n1, n2);
  std::set<std::tuple<int, int, int>> seen;
  for (size_t e = 0; e < j.size(); ++e) {
    const std::string ep = at_index(path, e);
    get_array(j[e], ep, 4);
    const int a = static_cast<int>(get_int(j[e][0], at_index(ep, 0), 0, n0 - 1));
    const int b = static_cast<int>(get_int(j[e][1], at_index(ep, 1), 0, n1 - 1));
    const int k = static_cast<int>(get_int(j[e][2], at_index(ep, 2), 0, n2 - 1));
    const Rational c = get_rational(j[e][3], at_index(ep, 3));
    if (!seen.insert({a, b, k}).second) fail(ep, "duplicate entry");
    if (antisymmetric) {
      if (a == b) fail(ep, "bracket of a basis element with itself must vanish");
      if (!seen.insert({b, a, k}).second) fail(ep, "entry also given with the indices swapped");
      t(b, a, k) = -c;
    }
    t(a, b, k) = c;
  }
  return t;
}

LieAlgebra get_algebra(const json& j, const std::string& path, const std::string& default_name) {
  allow_keys(j, path, {"name", "dim", "brackets", "representation"});
  const int dim = static_cast<int>(get_int(require(j, "dim", path), join(path, "dim"), 0, 64));
  std::string name = default_name;
  if (const json* n = optional_field(j, "name")) name = get_string(*n, join(path, "name"));
  LieAlgebra L(name, dim);
  if (const json* b = optional_field(j, "brackets")) L.structure = get_tensor(*b, dim, dim, dim, join(path, "brackets"), true);
  if (const json* r = optional_field(j, "representation")) {
    const std::string rp = join(path, "representation");
    allow_keys(*r, rp, {"size", "matrices"});
    MatrixRep rep;
    rep.n = static_cast<int>(get_int(require(*r, "size", rp), join(rp, "size"), 1, 16));
    const json& mats = get_array(require(*r, "matrices", rp), join(rp, "matrices"), static_cast<size_t>(dim));
    for (int a = 0; a < dim; ++a) rep.mats.push_back(get_matrix(mats[a], rep.n, rep.n, at_index(join(rp, "matrices"), a)));
    L.rep = rep;
    if (sgn(representation_residual(L)) != 0) fail(rp, "matrices do not satisfy the bracket relations");
  }
  return L;
}

// "adjoint", "trivial", or tensor entries for g acting on the given algebra.
Tensor3 get_action(const json& j, const LieAlgebra& g, const LieAlgebra& target, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "trivial") return Tensor3(g.dim, target.dim, target.dim);
    if (s == "adjoint") {
      if (g.dim != target.dim) fail(path, "\"adjoint\" needs the acted-on algebra to have the dimension of g");
      return adjoint_tensor(g);
    }
    fail(path, "expected \"adjoint\", \"trivial\" or a list of entries");
  }
  return get_tensor(j, g.dim, target.dim, target.dim, path, false);
}

std::vector<std::vector<int>> get_table(const json& j, size_t rows, size_t cols, int bound, const std::string& path) {
  get_array(j, path, rows);
  std::vector<std::vector<int>> t(rows);
  for (size_t r = 0; r < rows; ++r) {
    get_array(j[r], at_index(path, r), cols);
    for (size_t c = 0; c < cols; ++c)
      t[r].push_back(static_cast<int>(get_int(j[r][c], at_index(at_index(path, r), c), 0, bound - 1)));
  }
  return t;
}

std::vector<int> get_map(const json& j, size_t size, int bound, const std::string& path) {
  get_array(j, path, size);
  std::vector<int> m;
  for (size_t i = 0; i < size; ++i) m.push_back(static_cast<int>(get_int(j[i], at_index(path, i), 0, bound - 1)));
  return m;
}

FiniteGroup get_group(const json& j, const std::string& name, const std::string& path) {
  get_array(j, path);
  const size_t n = j.size();
  if (n == 0) fail(path, "a group needs at least one element");
  try {
    return FiniteGroup::from_table(name, get_table(j, n, n, static_cast<int>(n), path));
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& t) {
  std::vector<int> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

FiniteTwoCrossedModule get_finite(const json& j, const std::string& path) {
  allow_keys(j, path, {"name", "G", "H", "L", "alpha", "beta", "act_h", "act_l", "peiffer"});
  FiniteTwoCrossedModule M;
  M.name = get_string(require(j, "name", path), join(path, "name"));
  M.G = get_group(require(j, "G", path), "G", join(path, "G"));
  M.H = get_group(require(j, "H", path), "H", join(path, "H"));
  M.L = get_group(require(j, "L", path), "L", join(path, "L"));
  const size_t g = M.G.order(), h = M.H.order(), l = M.L.order();
  M.alpha = get_map(require(j, "alpha", path), h, static_cast<int>(g), join(path, "alpha"));
  M.beta = get_map(require(j, "beta", path), l, static_cast<int>(h), join(path, "beta"));
  M.act_h = flatten(get_table(require(j, "act_h", path), g, h, static_cast<int>(h), join(path, "act_h")));
  M.act_l = flatten(get_table(require(j, "act_l", path), g, l, static_cast<int>(l), join(path, "act_l")));
  M.peiffer = flatten(get_table(require(j, "peiffer", path), h, h, static_cast<int>(l), join(path, "peiffer")));
  validate_tables(M);
  return M;
}

std::array<Matrix, 3> get_gram_set(const json& j, const DifferentialTwoCrossedModule& M, const std::string& path) {
  allow_keys(j, path, {"g", "h", "l"});
  const int dims[3] = {M.g->dim, M.h->dim, M.l->dim};
  const char* keys[3] = {"g", "h", "l"};
  std::array<Matrix, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (const json* m = optional_field(j, keys[i]))
      out[i] = get_matrix(*m, dims[i], dims[i], join(path, keys[i]));
    else
      out[i] = Matrix::identity(dims[i]);
  }
  return out;
}

void check_generalized_inverse(const Matrix& X, const Matrix& R, const std::string& path) {
  if (!(X * R * X == X)) fail(path, "not a generalized inverse (X R X differs from X)");
}

// --- export -----------------------------------------------------------------

ojson rational_json(const Rational& q) { return to_string(q); }

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ojson tensor_json(const Tensor3& t, bool antisymmetric) {
  ojson out = ojson::array();
  for (int a = 0; a < t.n0; ++a)
    for (int b = antisymmetric ? a + 1 : 0; b < t.n1; ++b)
      for (int k = 0; k < t.n2; ++k)
        if (sgn(t(a, b, k)) != 0) out.push_back(ojson::array({a, b, k, to_string(t(a, b, k))}));
  return out;
}

ojson algebra_json(const LieAlgebra& L) {
  ojson j;
  j["name"] = L.name;
  j["dim"] = L.dim;
  j["brackets"] = tensor_json(L.structure, true);
  if (L.rep) {
    ojson mats = ojson::array();
    for (const auto& m : L.rep->mats) mats.push_back(matrix_json(m));
    j["representation"] = {{"size", L.rep->n}, {"matrices", mats}};
  }
  return j;
}

ojson action_json(const Tensor3& t, const LieAlgebra& g) {
  if (t.is_zero()) return "trivial";
  if (t.n1 == g.dim && t == adjoint_tensor(g)) return "adjoint";
  return tensor_json(t, false);
}

ojson table_json(const std::vector<int>& flat, int cols) {
  ojson rows = ojson::array();
  for (size_t i = 0; i < flat.size(); i += cols) rows.push_back(std::vector<int>(flat.begin() + i, flat.begin() + i + cols));
  return rows;
}

ojson finite_json(const FiniteTwoCrossedModule& M) {
  ojson j;
  j["name"] = M.name;
  j["G"] = M.G.table();
  j["H"] = M.H.table();
  j["L"] = M.L.table();
  j["alpha"] = M.alpha;
  j["beta"] = M.beta;
  j["act_h"] = table_json(M.act_h, M.H.order());
  j["act_l"] = table_json(M.act_l, M.L.order());
  j["peiffer"] = table_json(M.peiffer, M.H.order());
  return j;
}

ojson gram_set_json(const std::array<Matrix, 3>& s) {
  return {{"g", matrix_json(s[0])}, {"h", matrix_json(s[1])}, {"l", matrix_json(s[2])}};
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void attach_triple(InstanceConfig& cfg) {
  const auto& M = cfg.module;
  cfg.triple.reset();
  cfg.triple_error.clear();
  if (cfg.grams) {
    try {
      cfg.triple = InvariantFormTriple::make((*cfg.grams)[0], (*cfg.grams)[1], (*cfg.grams)[2]);
    } catch (const StructuralError& e) {
      throw ConfigError(std::string("invariant_forms.grams: ") + e.what());
    }
    return;
  }
  const std::array<Matrix, 3> seeds =
      cfg.gram_seeds ? *cfg.gram_seeds
                     : std::array<Matrix, 3>{Matrix::identity(M.g->dim), Matrix::identity(M.h->dim), Matrix::identity(M.l->dim)};
  try {
    cfg.triple = project_invariant(M, seeds[0], seeds[1], seeds[2]);
  } catch (const ConstructionError& e) {
    cfg.triple_error = e.what();
  }
}

InstanceConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("(root)", "expected an object");
  allow_keys(root, "", {"name", "ambient_dim", "algebras", "alpha", "beta", "actions", "peiffer", "right_inverses",
                        "substitute_bracket_for_plain_wedge", "invariant_forms", "axioms", "random", "reduction",
                        "finite"});
  InstanceConfig cfg;
  cfg.name = get_string(require(root, "name", ""), "name");

  const json& algs = require(root, "algebras", "");
  allow_keys(algs, "algebras", {"g", "h", "l"});
  LieAlgebra g = get_algebra(require(algs, "g", "algebras"), "algebras.g", "g");
  LieAlgebra h = get_algebra(require(algs, "h", "algebras"), "algebras.h", "h");
  LieAlgebra l = get_algebra(require(algs, "l", "algebras"), "algebras.l", "l");
  DifferentialTwoCrossedModule M = make_module(cfg.name, g, h, l);

  if (const json* a = optional_field(root, "alpha")) M.alpha = get_matrix(*a, g.dim, h.dim, "alpha");
  if (const json* b = optional_field(root, "beta")) M.beta = get_matrix(*b, h.dim, l.dim, "beta");
  if (const json* acts = optional_field(root, "actions")) {
    allow_keys(*acts, "actions", {"g", "h", "l"});
    if (const json* x = optional_field(*acts, "g")) M.act_g = get_action(*x, g, g, "actions.g");
    if (const json* x = optional_field(*acts, "h")) M.act_h = get_action(*x, g, h, "actions.h");
    if (const json* x = optional_field(*acts, "l")) M.act_l = get_action(*x, g, l, "actions.l");
  }
  if (const json* p = optional_field(root, "peiffer")) M.peiffer = get_tensor(*p, h.dim, h.dim, l.dim, "peiffer", false);
  if (const json* r = optional_field(root, "right_inverses")) {
    allow_keys(*r, "right_inverses", {"alpha", "beta"});
    if (const json* x = optional_field(*r, "alpha")) {
      M.alpha_right_inverse = get_matrix(*x, h.dim, g.dim, "right_inverses.alpha");
      check_generalized_inverse(M.alpha, *M.alpha_right_inverse, "right_inverses.alpha");
    }
    if (const json* x = optional_field(*r, "beta")) {
      M.beta_right_inverse = get_matrix(*x, l.dim, h.dim, "right_inverses.beta");
      check_generalized_inverse(M.beta, *M.beta_right_inverse, "right_inverses.beta");
    }
  }
  if (const json* s = optional_field(root, "substitute_bracket_for_plain_wedge")) {
    if (!s->is_boolean()) fail("substitute_bracket_for_plain_wedge", "expected true or false");
    M.bracket_substitution = s->get<bool>();
  }
  cfg.module = std::move(M);

  if (const json* f = optional_field(root, "invariant_forms")) {
    allow_keys(*f, "invariant_forms", {"grams", "gram_seeds"});
    const json* grams = optional_field(*f, "grams");
    const json* seeds = optional_field(*f, "gram_seeds");
    if (grams && seeds) fail("invariant_forms", "give either grams or gram_seeds, not both");
    if (grams) cfg.grams = get_gram_set(*grams, cfg.module, "invariant_forms.grams");
    if (seeds) cfg.gram_seeds = get_gram_set(*seeds, cfg.module, "invariant_forms.gram_seeds");
  }
  if (const json* ax = optional_field(root, "axioms")) {
    allow_keys(*ax, "axioms", {"disabled"});
    if (const json* dis = optional_field(*ax, "disabled")) {
      get_array(*dis, "axioms.disabled");
      const auto& names = axiom_names();
      for (size_t i = 0; i < dis->size(); ++i) {
        const std::string n = get_string((*dis)[i], at_index("axioms.disabled", i));
        if (std::find(names.begin(), names.end(), n) == names.end()) fail(at_index("axioms.disabled", i), "unknown axiom '" + n + "'");
        cfg.axioms.disabled.insert(n);
      }
    }
  }
  if (const json* r = optional_field(root, "random")) {
    allow_keys(*r, "random", {"seed", "degree_cap", "terms", "coefficient_bound"});
    if (const json* x = optional_field(*r, "seed")) cfg.random.seed = static_cast<std::uint64_t>(get_int(*x, "random.seed", 0, 1LL << 62));
    if (const json* x = optional_field(*r, "degree_cap")) cfg.random.degree_cap = static_cast<int>(get_int(*x, "random.degree_cap", 0, 8));
    if (const json* x = optional_field(*r, "terms")) cfg.random.terms = static_cast<int>(get_int(*x, "random.terms", 1, 64));
    if (const json* x = optional_field(*r, "coefficient_bound"))
      cfg.random.coefficient_bound = static_cast<int>(get_int(*x, "random.coefficient_bound", 1, 1000));
  }
  if (const json* d = optional_field(root, "ambient_dim")) cfg.ambient_dim = static_cast<int>(get_int(*d, "ambient_dim", 1, kMaxAmbient));
  if (const json* r = optional_field(root, "reduction")) {
    allow_keys(*r, "reduction", {"arrow"});
    const std::string a = get_string(require(*r, "arrow", "reduction"), "reduction.arrow");
    try {
      cfg.reduction = arrow_from_name(a);
    } catch (const ConfigError& e) {
      fail("reduction.arrow", e.what());
    }
  }
  if (const json* f = optional_field(root, "finite")) {
    get_array(*f, "finite");
    for (size_t i = 0; i < f->size(); ++i) cfg.finite.push_back(get_finite((*f)[i], at_index("finite", i)));
  }
  attach_triple(cfg);
  return cfg;
}

InstanceConfig load_config(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string export_config(const InstanceConfig& cfg) {
  const auto& M = cfg.module;
  ojson j;
  j["name"] = cfg.name;
  j["ambient_dim"] = cfg.ambient_dim;
  j["algebras"] = {{"g", algebra_json(*M.g)}, {"h", algebra_json(*M.h)}, {"l", algebra_json(*M.l)}};
  j["alpha"] = matrix_json(M.alpha);
  j["beta"] = matrix_json(M.beta);
  j["actions"] = {{"g", action_json(M.act_g, *M.g)}, {"h", action_json(M.act_h, *M.g)}, {"l", action_json(M.act_l, *M.g)}};
  j["peiffer"] = tensor_json(M.peiffer, false);
  if (M.alpha_right_inverse || M.beta_right_inverse) {
    ojson r = ojson::object();
    if (M.alpha_right_inverse) r["alpha"] = matrix_json(*M.alpha_right_inverse);
    if (M.beta_right_inverse) r["beta"] = matrix_json(*M.beta_right_inverse);
    j["right_inverses"] = r;
  }
  j["substitute_bracket_for_plain_wedge"] = M.bracket_substitution;
  if (cfg.grams) j["invariant_forms"] = {{"grams", gram_set_json(*cfg.grams)}};
  if (cfg.gram_seeds) j["invariant_forms"] = {{"gram_seeds", gram_set_json(*cfg.gram_seeds)}};
  if (!cfg.axioms.disabled.empty()) j["axioms"] = {{"disabled", std::vector<std::string>(cfg.axioms.disabled.begin(), cfg.axioms.disabled.end())}};
  j["random"] = {{"seed", cfg.random.seed},
                 {"degree_cap", cfg.random.degree_cap},
                 {"terms", cfg.random.terms},
                 {"coefficient_bound", cfg.random.coefficient_bound}};
  if (cfg.reduction) j["reduction"] = {{"arrow", arrow_name(*cfg.reduction)}};
  if (!cfg.finite.empty()) {
    ojson f = ojson::array();
    for (const auto& F : cfg.finite) f.push_back(finite_json(F));
    j["finite"] = f;
  }
  return pretty_json(j);
}

}  // namespace tfym
