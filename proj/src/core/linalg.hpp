#pragma once

// Exact dense linear algebra over a field (Rational or Scalar).

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace sugeom {

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> identity_matrix(size_t n) {
  Matrix<F> m(n, std::vector<F>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<F> out(n, std::vector<F>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t r = 0; r < k; ++r) {
      if (is_zero(a[i][r])) continue;
      for (size_t j = 0; j < m; ++j)
        if (!is_zero(b[r][j])) out[i][j] += a[i][r] * b[r][j];
    }
  return out;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  if (a.empty()) return {};
  Matrix<F> out(a[0].size(), std::vector<F>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

/// Reduced row echelon form.  Pivots are the first nonzero column of each
/// row, scanning columns left to right.
template <class F>
struct Echelon {
  Matrix<F> rows;            // reduced rows, one per pivot
  std::vector<size_t> pivots;  // pivot column of each row
  size_t rank() const { return pivots.size(); }
};

template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  Echelon<F> out;
  if (m.empty()) return out;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    F inv = F(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis of {x : m x = 0}; one vector per free column, in column order.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m, size_t cols) {
  Echelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  Matrix<F> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols);
    v[free] = F(1);
    for (size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  const size_t n = m.size();
  Matrix<F> aug(n, std::vector<F>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = F(1);
  }
  Echelon<F> e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> out(n, std::vector<F>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = e.rows[i][n + j];
  return out;
}

template <class F>
F determinant(Matrix<F> m) {
  const size_t n = m.size();
  F det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    F inv = F(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      F f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Incrementally maintained span.  add() reduces against the current basis
/// and keeps the vector only when it is independent.
template <class F>
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t width) : width_(width) {}

  bool add(std::vector<F> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      F f = v[p];
      for (size_t j = p; j < width_; ++j)
        if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
    }
    size_t p = 0;
    while (p < width_ && is_zero(v[p])) ++p;
    if (p == width_) return false;
    F inv = F(1) / v[p];
    for (size_t j = p; j < width_; ++j) v[j] = v[j] * inv;
    // keep earlier rows reduced against the new pivot
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      F f = row[p];
      for (size_t j = p; j < width_; ++j)
        if (!is_zero(v[j])) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<F> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      F f = v[p];
      for (size_t j = p; j < width_; ++j)
        if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
    }
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  size_t dimension() const { return rows_.size(); }
  const Matrix<F>& basis() const { return rows_; }

 private:
  size_t width_;
  Matrix<F> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace sugeom
