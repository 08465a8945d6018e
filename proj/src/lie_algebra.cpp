#include "tfym/lie_algebra.hpp"

namespace tfym {

bool Tensor3::is_zero() const {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

AlgebraElement make_element(AlgebraPtr alg, Vec coords) {
  if (!alg) throw StructuralError("element without algebra");
  if (static_cast<int>(coords.size()) != alg->dim)
    throw StructuralError("element of " + alg->name + " needs " + std::to_string(alg->dim) + " coordinates");
  return AlgebraElement{std::move(alg), std::move(coords)};
}

AlgebraElement basis_element(AlgebraPtr alg, int i) {
  Vec c(alg->dim);
  c.at(i) = 1;
  return make_element(std::move(alg), std::move(c));
}

AlgebraElement zero_element(AlgebraPtr alg) {
  Vec c(alg->dim);
  return make_element(std::move(alg), std::move(c));
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra != b.algebra) throw StructuralError("bracket of elements from different algebras");
  return AlgebraElement{a.algebra, contract(a.algebra->structure, a.coords, b.coords)};
}

std::vector<double> bracket_float(const LieAlgebra& L, const std::vector<double>& a,
                                  const std::vector<double>& b) {
  return contract(L.structure, a, b);
}

Rational jacobi_residual(const LieAlgebra& L) {
  const int n = L.dim;
  const Tensor3& c = L.structure;
  Rational worst = 0;
  // [[e_a,e_b],e_c] has component m equal to sum_k c(a,b,k) c(k,c,m)
  auto nested = [&](int a, int b, int cc, int m) {
    Rational s = 0;
    for (int k = 0; k < n; ++k)
      if (sgn(c(a, b, k)) != 0) s += c(a, b, k) * c(k, cc, m);
    return s;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        for (int m = 0; m < n; ++m) {
          Rational r = abs(nested(a, b, cc, m) + nested(b, cc, a, m) + nested(cc, a, b, m));
          if (r > worst) worst = r;
        }
  return worst;
}

Rational antisymmetry_residual(const LieAlgebra& L) {
  Rational worst = 0;
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b)
      for (int k = 0; k < L.dim; ++k) {
        Rational r = abs(L.structure(a, b, k) + L.structure(b, a, k));
        if (r > worst) worst = r;
      }
  return worst;
}

Rational representation_residual(const LieAlgebra& L) {
  if (!L.rep) return 0;
  const auto& R = *L.rep;
  if (static_cast<int>(R.mats.size()) != L.dim) throw StructuralError(L.name + ": representation has wrong length");
  Rational worst = 0;
  for (int a = 0; a < L.dim; ++a)
    for (int b = 0; b < L.dim; ++b) {
      Matrix lhs = R.mats[a] * R.mats[b] - R.mats[b] * R.mats[a];
      Matrix rhs(R.n, R.n);
      for (int k = 0; k < L.dim; ++k)
        if (sgn(L.structure(a, b, k)) != 0)
          for (size_t i = 0; i < rhs.v.size(); ++i) rhs.v[i] += L.structure(a, b, k) * R.mats[k].v[i];
      Rational r = max_abs(lhs - rhs);
      if (r > worst) worst = r;
    }
  return worst;
}

AlgebraElement random_element(AlgebraPtr alg, std::uint64_t seed, int bound) {
  if (bound < 1) throw PreconditionError("random_element: bound must be >= 1");
  Rng rng(seed);
  Vec c(alg->dim);
  for (auto& q : c) q = rng.rational(bound);
  return make_element(std::move(alg), std::move(c));
}

LieAlgebra abelian_algebra(const std::string& name, int dim) { return LieAlgebra(name, dim); }

namespace {

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((a + 1) % 3 == b) ? 1 : -1;
}

}  // namespace

LieAlgebra su2_algebra(const std::string& name) {
  LieAlgebra L(name, 3);
  MatrixRep rep;
  rep.n = 3;
  for (int a = 0; a < 3; ++a) {
    Matrix m(3, 3);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        L.structure(a, b, c) = levi_civita(a, b, c);
        m(b, c) = -levi_civita(a, b, c);
      }
    rep.mats.push_back(m);
  }
  L.rep = rep;
  return L;
}

LieAlgebra u2_algebra(const std::string& name) {
  LieAlgebra L(name, 4);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) L.structure(a, b, c) = levi_civita(a, b, c);
  // complex 2x2 matrix A + iB realified as [[A, -B], [B, A]]
  auto realify = [](const Matrix& re, const Matrix& im) {
    Matrix m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m(i, j) = re(i, j);
        m(i + 2, j + 2) = re(i, j);
        m(i, j + 2) = -im(i, j);
        m(i + 2, j) = im(i, j);
      }
    return m;
  };
  const Rational h(1, 2);
  Matrix z(2, 2), re, im;
  MatrixRep rep;
  rep.n = 4;
  im = z;  // -i/2 sigma_1
  im(0, 1) = -h;
  im(1, 0) = -h;
  rep.mats.push_back(realify(z, im));
  re = z;  // -i/2 sigma_2
  re(0, 1) = -h;
  re(1, 0) = h;
  rep.mats.push_back(realify(re, z));
  im = z;  // -i/2 sigma_3
  im(0, 0) = -h;
  im(1, 1) = h;
  rep.mats.push_back(realify(z, im));
  im = z;  // i/2 * identity
  im(0, 0) = h;
  im(1, 1) = h;
  rep.mats.push_back(realify(z, im));
  L.rep = rep;
  return L;
}

LieAlgebra aff1_algebra(const std::string& name) {
  LieAlgebra L(name, 2);
  L.structure(0, 1, 1) = 1;
  L.structure(1, 0, 1) = -1;
  return L;
}

LieAlgebra direct_sum(const std::string& name, const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra L(name, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) L.structure(i, j, k) = a.structure(i, j, k);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k) L.structure(a.dim + i, a.dim + j, a.dim + k) = b.structure(i, j, k);
  if (a.rep && b.rep) {
    MatrixRep rep;
    rep.n = a.rep->n + b.rep->n;
    for (int i = 0; i < L.dim; ++i) {
      Matrix m(rep.n, rep.n);
      const bool first = i < a.dim;
      const Matrix& src = first ? a.rep->mats[i] : b.rep->mats[i - a.dim];
      const int off = first ? 0 : a.rep->n;
      for (int r = 0; r < src.rows; ++r)
        for (int c = 0; c < src.cols; ++c) m(off + r, off + c) = src(r, c);
      rep.mats.push_back(m);
    }
    L.rep = rep;
  }
  return L;
}

}  // namespace tfym
