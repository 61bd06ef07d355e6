#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "sqf/errors.hpp"
#include "sqf/scalar.hpp"

namespace sqf {

// Dense matrix over an exact field (Rational or Scalar).
template <class F>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<F> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}

  F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rs, std::size_t ncols) {
    Matrix m(rs.size(), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].size() != ncols) throw DimensionMismatch("row length mismatch");
      for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rs[i][j];
    }
    return m;
  }

  std::vector<F> row(std::size_t i) const { return {a.begin() + i * cols, a.begin() + (i + 1) * cols}; }
  std::vector<F> col(std::size_t j) const {
    std::vector<F> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols != o.rows) throw DimensionMismatch("matrix product shape");
    Matrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        const F& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols; ++j)
          if (!is_zero(o(k, j))) r(i, j) += x * o(k, j);
      }
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols) throw DimensionMismatch("matrix-vector shape");
    std::vector<F> r(rows, F(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_zero(v[j]) && !is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a)
      if (!is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<F> v(m.cols, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with m x = b, or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows) throw DimensionMismatch("solve: rhs length");
  Matrix<F> aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<F> x(m.cols, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols);
  return x;
}

template <class F>
F det(Matrix<F> m) {
  if (m.rows != m.cols) throw DimensionMismatch("det of a non-square matrix");
  F d(1);
  for (std::size_t c = 0; c < m.cols; ++c) {
    std::size_t p = c;
    while (p < m.rows && is_zero(m(p, c))) ++p;
    if (p == m.rows) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < m.rows; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  std::size_t n = m.rows;
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

// Cofactor expansion; works over any commutative ring (used for MultiPoly).
template <class R>
R det_laplace(const std::vector<std::vector<R>>& m, const R& one) {
  std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  R acc = one - one;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<R>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    R t = m[0][j] * det_laplace(minor, one);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

using ScalarMatrix = Matrix<Scalar>;
using RationalMatrix = Matrix<Rational>;

}  // namespace sqf
