#include "znp/linalg.hpp"

#include <utility>

namespace znp {

Point to_point(const LatticeVector& v) {
  Point p(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) p[i] = Rational(static_cast<long>(v[i]));
  return p;
}

Rational dot(const Point& a, const Point& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point scale(const Point& a, const Rational& s) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(Matrix rows) { return rref(rows).size(); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<Point> solve(Matrix m, Point rhs) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
  const auto pivots = rref(m);
  if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rational(0));
    a[i][n + i] = 1;
  }
  const auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(n, Point(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::optional<Point> orthogonal_complement_vector(const Matrix& rows, std::size_t dim) {
  Matrix m = rows;
  if (m.empty()) {
    Point e(dim, Rational(0));
    e[0] = 1;
    return e;
  }
  const auto pivots = rref(m);
  if (pivots.size() == dim) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < dim; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    free_col = c;
    break;
  }
  Point v(dim, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
  return v;
}

}  // namespace znp
