#pragma once

#include <vector>

#include "tfym/rational.hpp"

namespace tfym {

using Vec = std::vector<Rational>;

// Dense row-major matrix over exact rationals.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> v;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c) {}

  Rational& operator()(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n);
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& x);
Matrix transpose(const Matrix& a);

bool is_symmetric(const Matrix& a);
// Symmetric positive definite test by pivots of unpivoted elimination.
bool is_positive_definite(const Matrix& a);
int rank(Matrix a);
// Throws StructuralError when singular.
Matrix inverse(const Matrix& a);
// Basis of {x : A x = 0}, as columns of the returned matrix (cols may be 0).
Matrix nullspace(const Matrix& a);
// Some x with A x = b; returns false if none exists.
bool solve(const Matrix& a, const Vec& b, Vec& x);

Rational max_abs(const Vec& x);
Rational max_abs(const Matrix& a);

template <class T>
std::vector<T> convert_entries(const Matrix& a) {
  std::vector<T> out;
  out.reserve(a.v.size());
  for (const auto& q : a.v) out.push_back(Field<T>::from(q));
  return out;
}

}  // namespace tfym
