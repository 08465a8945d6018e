#include "tfym/crossed_module.hpp"

#include <functional>

namespace tfym {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

void AxiomReport::add(const std::string& name, const Rational& residual) {
  entries.push_back({name, residual, sgn(residual) == 0 ? CheckStatus::pass : CheckStatus::fail, {}});
}

void AxiomReport::skip(const std::string& name, const std::string& reason) {
  entries.push_back({name, Rational(0), CheckStatus::skipped, reason});
}

bool AxiomReport::passed() const {
  for (const auto& e : entries)
    if (e.status == CheckStatus::fail) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.status == CheckStatus::fail) out.push_back(e.name);
  return out;
}

namespace {

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec operator+(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec ct(const Tensor3& t, const Vec& x, const Vec& y) { return contract(t, x, y); }

// max residual of f over all index tuples of the given extents
Rational scan(const std::vector<int>& extents, const std::function<Vec(const std::vector<int>&)>& f) {
  Rational worst = 0;
  for (int e : extents)
    if (e == 0) return worst;
  std::vector<int> idx(extents.size(), 0);
  for (;;) {
    Rational r = max_abs(f(idx));
    if (r > worst) worst = r;
    size_t p = 0;
    while (p < idx.size() && ++idx[p] == extents[p]) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  return worst;
}

}  // namespace

AxiomReport crossed_module_report(const DifferentialCrossedModule& cm) {
  const int nh = cm.h->dim, ng = cm.g->dim;
  const Tensor3& ch = cm.h->structure;
  const Tensor3& cg = cm.g->structure;
  auto al = [&](const Vec& y) { return cm.alpha * y; };
  auto A = [&](const Vec& x, const Vec& y) { return ct(cm.act, x, y); };
  AxiomReport rep;
  rep.add("g_jacobi", jacobi_residual(*cm.g));
  rep.add("h_jacobi", jacobi_residual(*cm.h));
  rep.add("alpha_homomorphism", scan({nh, nh}, [&](const std::vector<int>& i) {
            Vec a = unit(nh, i[0]), b = unit(nh, i[1]);
            return al(ct(ch, a, b)) - ct(cg, al(a), al(b));
          }));
  rep.add("action_derivation", scan({ng, nh, nh}, [&](const std::vector<int>& i) {
            Vec x = unit(ng, i[0]), a = unit(nh, i[1]), b = unit(nh, i[2]);
            return A(x, ct(ch, a, b)) - ct(ch, A(x, a), b) - ct(ch, a, A(x, b));
          }));
  rep.add("action_representation", scan({ng, ng, nh}, [&](const std::vector<int>& i) {
            Vec x1 = unit(ng, i[0]), x2 = unit(ng, i[1]), y = unit(nh, i[2]);
            return A(ct(cg, x1, x2), y) - A(x1, A(x2, y)) + A(x2, A(x1, y));
          }));
  rep.add("alpha_equivariance", scan({ng, nh}, [&](const std::vector<int>& i) {
            Vec x = unit(ng, i[0]), y = unit(nh, i[1]);
            return al(A(x, y)) - ct(cg, x, al(y));
          }));
  rep.add("peiffer_identity", scan({nh, nh}, [&](const std::vector<int>& i) {
            Vec a = unit(nh, i[0]), b = unit(nh, i[1]);
            return A(al(a), b) - ct(ch, a, b);
          }));
  return rep;
}

void validate_shapes(const DifferentialTwoCrossedModule& M) {
  if (!M.g || !M.h || !M.l) throw StructuralError(M.name + ": missing algebra");
  const int ng = M.g->dim, nh = M.h->dim, nl = M.l->dim;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw StructuralError(M.name + ": " + what + " has the wrong shape");
  };
  need(M.alpha.rows == ng && M.alpha.cols == nh, "alpha");
  need(M.beta.rows == nh && M.beta.cols == nl, "beta");
  need(M.act_g.n0 == ng && M.act_g.n1 == ng && M.act_g.n2 == ng, "action on g");
  need(M.act_h.n0 == ng && M.act_h.n1 == nh && M.act_h.n2 == nh, "action on h");
  need(M.act_l.n0 == ng && M.act_l.n1 == nl && M.act_l.n2 == nl, "action on l");
  need(M.peiffer.n0 == nh && M.peiffer.n1 == nh && M.peiffer.n2 == nl, "peiffer");
  if (M.alpha_right_inverse) need(M.alpha_right_inverse->rows == nh && M.alpha_right_inverse->cols == ng, "alpha right inverse");
  if (M.beta_right_inverse) need(M.beta_right_inverse->rows == nl && M.beta_right_inverse->cols == nh, "beta right inverse");
  for (const AlgebraPtr& a : {M.g, M.h, M.l})
    if (a->structure.n0 != a->dim || a->structure.n1 != a->dim || a->structure.n2 != a->dim)
      throw StructuralError(a->name + ": structure tensor has the wrong shape");
}

Tensor3 adjoint_tensor(const LieAlgebra& g) { return g.structure; }

DifferentialTwoCrossedModule make_module(const std::string& name, LieAlgebra g, LieAlgebra h, LieAlgebra l) {
  DifferentialTwoCrossedModule M;
  M.name = name;
  const int ng = g.dim, nh = h.dim, nl = l.dim;
  M.act_g = adjoint_tensor(g);
  M.g = std::make_shared<const LieAlgebra>(std::move(g));
  M.h = std::make_shared<const LieAlgebra>(std::move(h));
  M.l = std::make_shared<const LieAlgebra>(std::move(l));
  M.alpha = Matrix(ng, nh);
  M.beta = Matrix(nh, nl);
  M.act_h = Tensor3(ng, nh, nh);
  M.act_l = Tensor3(ng, nl, nl);
  M.peiffer = Tensor3(nh, nh, nl);
  return M;
}

Tensor3 prime_action_tensor(const DifferentialTwoCrossedModule& M) {
  const int nh = M.h->dim, nl = M.l->dim;
  Tensor3 t(nh, nl, nl);
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nl; ++b)
      for (int c = 0; c < nh; ++c) {
        if (sgn(M.beta(c, b)) == 0) continue;
        for (int k = 0; k < nl; ++k) t(a, b, k) -= M.beta(c, b) * M.peiffer(c, a, k);
      }
  return t;
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {
      "g_jacobi",
      "h_jacobi",
      "l_jacobi",
      "alpha_beta_zero",
      "alpha_homomorphism",
      "beta_homomorphism",
      "g_action_adjoint",
      "h_action_derivation",
      "l_action_derivation",
      "h_action_representation",
      "l_action_representation",
      "alpha_equivariance",
      "beta_equivariance",
      "peiffer_equivariance",
      "peiffer_boundary",
      "peiffer_pair",
      "peiffer_left_bracket",
      "peiffer_right_bracket",
      "peiffer_symmetric_boundary",
  };
  return names;
}

AxiomReport axiom_report(const DifferentialTwoCrossedModule& M, const AxiomSelection& sel) {
  validate_shapes(M);
  for (const auto& d : sel.disabled) {
    bool known = false;
    for (const auto& n : axiom_names()) known = known || n == d;
    if (!known) throw ConfigError("unknown axiom '" + d + "'");
  }
  const int ng = M.g->dim, nh = M.h->dim, nl = M.l->dim;
  const Tensor3 &cg = M.g->structure, &ch = M.h->structure, &cl = M.l->structure;
  auto al = [&](const Vec& y) { return M.alpha * y; };
  auto be = [&](const Vec& z) { return M.beta * z; };
  auto Ag = [&](const Vec& x, const Vec& y) { return ct(M.act_g, x, y); };
  auto Ah = [&](const Vec& x, const Vec& y) { return ct(M.act_h, x, y); };
  auto Al = [&](const Vec& x, const Vec& z) { return ct(M.act_l, x, z); };
  auto P = [&](const Vec& a, const Vec& b) { return ct(M.peiffer, a, b); };
  auto eg = [&](int i) { return unit(ng, i); };
  auto eh = [&](int i) { return unit(nh, i); };
  auto el = [&](int i) { return unit(nl, i); };

  using Idx = std::vector<int>;
  AxiomReport rep;
  auto run = [&](const std::string& name, const std::function<Rational()>& f) {
    if (sel.enabled(name))
      rep.add(name, f());
    else
      rep.skip(name, "disabled by configuration");
  };

  run("g_jacobi", [&] { return std::max(jacobi_residual(*M.g), antisymmetry_residual(*M.g)); });
  run("h_jacobi", [&] { return std::max(jacobi_residual(*M.h), antisymmetry_residual(*M.h)); });
  run("l_jacobi", [&] { return std::max(jacobi_residual(*M.l), antisymmetry_residual(*M.l)); });
  run("alpha_beta_zero", [&] { return max_abs(M.alpha * M.beta); });
  run("alpha_homomorphism", [&] {
    return scan({nh, nh}, [&](const Idx& i) { return al(ct(ch, eh(i[0]), eh(i[1]))) - ct(cg, al(eh(i[0])), al(eh(i[1]))); });
  });
  run("beta_homomorphism", [&] {
    return scan({nl, nl}, [&](const Idx& i) { return be(ct(cl, el(i[0]), el(i[1]))) - ct(ch, be(el(i[0])), be(el(i[1]))); });
  });
  run("g_action_adjoint", [&] {
    Rational w = 0;
    for (size_t i = 0; i < M.act_g.v.size(); ++i) w = std::max<Rational>(w, abs(M.act_g.v[i] - cg.v[i]));
    return w;
  });
  run("h_action_derivation", [&] {
    return scan({ng, nh, nh}, [&](const Idx& i) {
      Vec x = eg(i[0]), a = eh(i[1]), b = eh(i[2]);
      return Ah(x, ct(ch, a, b)) - ct(ch, Ah(x, a), b) - ct(ch, a, Ah(x, b));
    });
  });
  run("l_action_derivation", [&] {
    return scan({ng, nl, nl}, [&](const Idx& i) {
      Vec x = eg(i[0]), a = el(i[1]), b = el(i[2]);
      return Al(x, ct(cl, a, b)) - ct(cl, Al(x, a), b) - ct(cl, a, Al(x, b));
    });
  });
  run("h_action_representation", [&] {
    return scan({ng, ng, nh}, [&](const Idx& i) {
      Vec x1 = eg(i[0]), x2 = eg(i[1]), y = eh(i[2]);
      return Ah(ct(cg, x1, x2), y) - Ah(x1, Ah(x2, y)) + Ah(x2, Ah(x1, y));
    });
  });
  run("l_action_representation", [&] {
    return scan({ng, ng, nl}, [&](const Idx& i) {
      Vec x1 = eg(i[0]), x2 = eg(i[1]), z = el(i[2]);
      return Al(ct(cg, x1, x2), z) - Al(x1, Al(x2, z)) + Al(x2, Al(x1, z));
    });
  });
  run("alpha_equivariance", [&] {
    return scan({ng, nh}, [&](const Idx& i) { return al(Ah(eg(i[0]), eh(i[1]))) - Ag(eg(i[0]), al(eh(i[1]))); });
  });
  run("beta_equivariance", [&] {
    return scan({ng, nl}, [&](const Idx& i) { return be(Al(eg(i[0]), el(i[1]))) - Ah(eg(i[0]), be(el(i[1]))); });
  });
  run("peiffer_equivariance", [&] {
    return scan({ng, nh, nh}, [&](const Idx& i) {
      Vec x = eg(i[0]), a = eh(i[1]), b = eh(i[2]);
      return Al(x, P(a, b)) - P(Ah(x, a), b) - P(a, Ah(x, b));
    });
  });
  run("peiffer_boundary", [&] {
    return scan({nh, nh}, [&](const Idx& i) {
      Vec a = eh(i[0]), b = eh(i[1]);
      return be(P(a, b)) - ct(ch, a, b) + Ah(al(a), b);
    });
  });
  run("peiffer_pair", [&] {
    return scan({nl, nl}, [&](const Idx& i) {
      Vec a = el(i[0]), b = el(i[1]);
      return P(be(a), be(b)) - ct(cl, a, b);
    });
  });
  run("peiffer_left_bracket", [&] {
    return scan({nh, nh, nh}, [&](const Idx& i) {
      Vec y1 = eh(i[0]), y2 = eh(i[1]), y3 = eh(i[2]);
      return P(ct(ch, y1, y2), y3) - Al(al(y1), P(y2, y3)) - P(y1, ct(ch, y2, y3)) + Al(al(y2), P(y1, y3)) +
             P(y2, ct(ch, y1, y3));
    });
  });
  run("peiffer_right_bracket", [&] {
    return scan({nh, nh, nh}, [&](const Idx& i) {
      Vec y1 = eh(i[0]), y2 = eh(i[1]), y3 = eh(i[2]);
      return P(y1, ct(ch, y2, y3)) - P(be(P(y1, y2)), y3) + P(be(P(y1, y3)), y2);
    });
  });
  run("peiffer_symmetric_boundary", [&] {
    return scan({nl, nh}, [&](const Idx& i) {
      Vec z = el(i[0]), y = eh(i[1]);
      return P(be(z), y) + P(y, be(z)) + Al(al(y), z);
    });
  });
  return rep;
}

Part part_of(const DifferentialTwoCrossedModule& M, const AlgebraElement& v) {
  if (v.algebra == M.g) return Part::g;
  if (v.algebra == M.h) return Part::h;
  if (v.algebra == M.l) return Part::l;
  throw StructuralError("element does not belong to " + M.name);
}

AlgebraPtr algebra_of(const DifferentialTwoCrossedModule& M, Part p) {
  switch (p) {
    case Part::g: return M.g;
    case Part::h: return M.h;
    case Part::l: return M.l;
  }
  return nullptr;
}

namespace {

void expect(const DifferentialTwoCrossedModule& M, const AlgebraElement& v, Part p, const char* what) {
  if (v.algebra != algebra_of(M, p)) throw StructuralError(std::string(what) + ": argument in the wrong algebra");
}

}  // namespace

AlgebraElement peiffer(const DifferentialTwoCrossedModule& M, const AlgebraElement& y1, const AlgebraElement& y2) {
  expect(M, y1, Part::h, "peiffer");
  expect(M, y2, Part::h, "peiffer");
  return AlgebraElement{M.l, contract(M.peiffer, y1.coords, y2.coords)};
}

AlgebraElement act(const DifferentialTwoCrossedModule& M, const AlgebraElement& x, const AlgebraElement& v) {
  expect(M, x, Part::g, "act");
  switch (part_of(M, v)) {
    case Part::g: return AlgebraElement{M.g, contract(M.act_g, x.coords, v.coords)};
    case Part::h: return AlgebraElement{M.h, contract(M.act_h, x.coords, v.coords)};
    case Part::l: return AlgebraElement{M.l, contract(M.act_l, x.coords, v.coords)};
  }
  throw StructuralError("act: unreachable");
}

AlgebraElement act_h_prime(const DifferentialTwoCrossedModule& M, const AlgebraElement& y, const AlgebraElement& z) {
  expect(M, y, Part::h, "act_h_prime");
  expect(M, z, Part::l, "act_h_prime");
  Vec r = contract(M.peiffer, M.beta * z.coords, y.coords);
  for (auto& q : r) q = -q;
  return AlgebraElement{M.l, std::move(r)};
}

AlgebraElement alpha_apply(const DifferentialTwoCrossedModule& M, const AlgebraElement& y) {
  expect(M, y, Part::h, "alpha_apply");
  return AlgebraElement{M.g, M.alpha * y.coords};
}

AlgebraElement beta_apply(const DifferentialTwoCrossedModule& M, const AlgebraElement& z) {
  expect(M, z, Part::l, "beta_apply");
  return AlgebraElement{M.h, M.beta * z.coords};
}

DifferentialCrossedModule induced_crossed_module(const DifferentialTwoCrossedModule& M, const AxiomSelection& sel) {
  AxiomReport r = axiom_report(M, sel);
  if (!r.passed()) {
    std::string why;
    for (const auto& f : r.failures()) why += (why.empty() ? "" : ", ") + f;
    throw PreconditionError(M.name + " fails axioms: " + why);
  }
  return DifferentialCrossedModule{M.l, M.h, M.beta, prime_action_tensor(M)};
}

DifferentialCrossedModule lower_crossed_module(const DifferentialTwoCrossedModule& M) {
  return DifferentialCrossedModule{M.h, M.g, M.alpha, M.act_h};
}

bool peiffer_trivial(const DifferentialTwoCrossedModule& M) { return M.peiffer.is_zero(); }

bool maps_trivial(const DifferentialTwoCrossedModule& M) { return M.alpha.is_zero() && M.beta.is_zero(); }

}  // namespace tfym
