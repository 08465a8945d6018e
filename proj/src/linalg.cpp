#include "tfym/linalg.hpp"

#include <utility>

namespace tfym {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& q : v)
    if (sgn(q) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw StructuralError("matrix product: inner dimensions differ");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw StructuralError("matrix sum: shapes differ");
  Matrix c = a;
  for (size_t i = 0; i < c.v.size(); ++i) c.v[i] += b.v[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw StructuralError("matrix difference: shapes differ");
  Matrix c = a;
  for (size_t i = 0; i < c.v.size(); ++i) c.v[i] -= b.v[i];
  return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.cols) throw StructuralError("matrix-vector: length mismatch");
  Vec y(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
  return y;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

bool is_symmetric(const Matrix& a) {
  if (a.rows != a.cols) return false;
  for (int i = 0; i < a.rows; ++i)
    for (int j = i + 1; j < a.cols; ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_positive_definite(const Matrix& a) {
  if (!is_symmetric(a)) return false;
  Matrix m = a;
  const int n = m.rows;
  for (int p = 0; p < n; ++p) {
    if (sgn(m(p, p)) <= 0) return false;
    for (int i = p + 1; i < n; ++i) {
      if (sgn(m(i, p)) == 0) continue;
      Rational f = m(i, p) / m(p, p);
      for (int j = p; j < n; ++j) m(i, j) -= f * m(p, j);
    }
  }
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

Matrix inverse(const Matrix& a) {
  if (a.rows != a.cols) throw StructuralError("inverse of a non-square matrix");
  const int n = a.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
    throw StructuralError("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix nullspace(const Matrix& a) {
  Matrix m = a;
  auto piv = rref(m);
  std::vector<char> is_pivot(a.cols, 0);
  for (int c : piv) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.cols, static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    const int fc = free_cols[f];
    basis(fc, static_cast<int>(f)) = 1;
    for (size_t r = 0; r < piv.size(); ++r) basis(piv[r], static_cast<int>(f)) = -m(static_cast<int>(r), fc);
  }
  return basis;
}

bool solve(const Matrix& a, const Vec& b, Vec& x) {
  if (static_cast<int>(b.size()) != a.rows) throw StructuralError("solve: rhs length mismatch");
  Matrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols) return false;
  x.assign(a.cols, Rational(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), a.cols);
  return true;
}

Rational max_abs(const Vec& x) {
  Rational m = 0;
  for (const auto& q : x) {
    Rational a = abs(q);
    if (a > m) m = a;
  }
  return m;
}

Rational max_abs(const Matrix& a) { return max_abs(a.v); }

}  // namespace tfym
