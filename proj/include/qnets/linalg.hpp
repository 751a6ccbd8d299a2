#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qnets/rational.hpp"

namespace qnets {

// Dense exact-rational matrix, row major.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rational(0)) {}
  Rational& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  QMat transposed() const {
    QMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul shape");
    QMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (sgn(x.at(i, k)) == 0) continue;
        for (int j = 0; j < y.cols; ++j)
          z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }
};

inline Rational det(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square");
  int n = m.rows;
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m.at(r, c)) != 0) { p = r; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = c; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (sgn(m.at(r, c)) == 0) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

inline int rank(QMat m) {
  int rk = 0;
  for (int c = 0; c < m.cols && rk < m.rows; ++c) {
    int p = -1;
    for (int r = rk; r < m.rows; ++r)
      if (sgn(m.at(r, c)) != 0) { p = r; break; }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(rk, j));
    Rational inv = Rational(1) / m.at(rk, c);
    for (int r = rk + 1; r < m.rows; ++r) {
      if (sgn(m.at(r, c)) == 0) continue;
      Rational f = m.at(r, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

struct LinearSolve {
  bool consistent = false;
  int kernel_dim = 0;
  std::vector<Rational> x;  // one solution when consistent
};

// Gauss-Jordan on the augmented system; reports consistency and the kernel
// dimension so callers can insist on uniqueness.
inline LinearSolve solve(const QMat& A, const std::vector<Rational>& b) {
  if (int(b.size()) != A.rows) throw std::invalid_argument("solve shape");
  QMat m(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, A.cols) = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < A.cols && row < m.rows; ++c) {
    int p = -1;
    for (int r = row; r < m.rows; ++r)
      if (sgn(m.at(r, c)) != 0) { p = r; break; }
    if (p < 0) continue;
    for (int j = 0; j <= A.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, c);
    for (int j = c; j <= A.cols; ++j) m.at(row, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || sgn(m.at(r, c)) == 0) continue;
      Rational f = m.at(r, c);
      for (int j = c; j <= A.cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivot_col.push_back(c);
    ++row;
  }
  LinearSolve out;
  for (int r = row; r < m.rows; ++r)
    if (sgn(m.at(r, A.cols)) != 0) return out;  // inconsistent
  out.consistent = true;
  out.kernel_dim = A.cols - int(pivot_col.size());
  out.x.assign(A.cols, Rational(0));
  for (size_t k = 0; k < pivot_col.size(); ++k) out.x[pivot_col[k]] = m.at(int(k), A.cols);
  return out;
}

// Determinant over an arbitrary commutative ring by memoized Laplace
// expansion (first rows x chosen column subsets). Fine for n <= 8.
template <class T>
T det_expansion(const std::vector<std::vector<T>>& m) {
  int n = int(m.size());
  if (n == 0) return T{};
  std::vector<std::optional<T>> memo(size_t(1) << n);
  // minor over rows [n-k, n) and columns given by mask with k bits
  auto rec = [&](auto&& self, unsigned mask) -> T {
    if (memo[mask]) return *memo[mask];
    int k = __builtin_popcount(mask);
    if (k == 0) {
      memo[mask] = T(Rational(1));
      return *memo[mask];
    }
    int rowi = n - k;
    T acc{};
    int sign = 1, colpos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      T sub = self(self, mask & ~(1u << c));
      T term = m[rowi][c] * sub;
      acc = (sign > 0) ? acc + term : acc - term;
      sign = -sign;
      ++colpos;
    }
    memo[mask] = acc;
    return *memo[mask];
  };
  return rec(rec, (1u << n) - 1);
}

}  // namespace qnets
