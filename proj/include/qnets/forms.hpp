#pragma once

#include <stdexcept>
#include <vector>

#include "qnets/linalg.hpp"
#include "qnets/rational.hpp"

namespace qnets {

struct Inertia {
  int positive = 0, zero = 0, negative = 0;
  int n() const { return positive + zero + negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Real symmetric quadratic form with exact rational entries.
class SymmetricForm {
 public:
  SymmetricForm() = default;
  explicit SymmetricForm(int n) : n_(n), m_(n, n) {}
  explicit SymmetricForm(QMat m) : n_(m.rows), m_(std::move(m)) {
    if (m_.rows != m_.cols) throw std::invalid_argument("non-square form");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!(m_.at(i, j) == m_.at(j, i)))
          throw std::invalid_argument("non-symmetric form");
  }

  static SymmetricForm diagonal(const std::vector<Rational>& d) {
    SymmetricForm f(int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) f.m_.at(int(i), int(i)) = d[i];
    return f;
  }

  int dim() const { return n_; }
  const QMat& matrix() const { return m_; }
  const Rational& at(int i, int j) const { return m_.at(i, j); }
  void set(int i, int j, const Rational& v) {
    m_.at(i, j) = v;
    m_.at(j, i) = v;
  }

  Rational apply(const std::vector<Rational>& u) const {
    Rational acc = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) acc += m_.at(i, j) * u[i] * u[j];
    return acc;
  }

  // Floating view for the numerical pipelines.
  std::vector<double> matrix_d() const {
    std::vector<double> out(size_t(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[size_t(i) * n_ + j] = to_double(m_.at(i, j));
    return out;
  }

  friend SymmetricForm operator+(const SymmetricForm& a, const SymmetricForm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dim mismatch");
    SymmetricForm c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) c.m_.at(i, j) = a.m_.at(i, j) + b.m_.at(i, j);
    return c;
  }
  friend SymmetricForm operator*(const SymmetricForm& a, const Rational& s) {
    SymmetricForm c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) c.m_.at(i, j) = a.m_.at(i, j) * s;
    return c;
  }
  // congruence Q -> S^T Q S
  SymmetricForm congruent(const QMat& S) const {
    return SymmetricForm(S.transposed() * m_ * S);
  }
  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) {
    return a.n_ == b.n_ && a.m_.a == b.m_.a;
  }

 private:
  int n_ = 0;
  QMat m_;
};

// Sylvester signature by symmetric Gaussian elimination. Pivots on the
// largest-magnitude diagonal entry; when all active diagonal entries vanish,
// a hyperbolic off-diagonal 2x2 block contributes (+1, -1).
inline Inertia inertia(const SymmetricForm& q) {
  int n = q.dim();
  QMat a = q.matrix();
  std::vector<int> act;
  for (int i = 0; i < n; ++i) act.push_back(i);
  Inertia out;
  while (!act.empty()) {
    int piv = -1;
    Rational best = 0;
    for (int i : act) {
      Rational m = abs_q(a.at(i, i));
      if (sgn(m) != 0 && (piv < 0 || m > best)) {
        piv = i;
        best = m;
      }
    }
    if (piv >= 0) {
      (sgn(a.at(piv, piv)) > 0 ? out.positive : out.negative) += 1;
      Rational inv = Rational(1) / a.at(piv, piv);
      std::vector<int> rest;
      for (int i : act)
        if (i != piv) rest.push_back(i);
      for (int r : rest)
        for (int c : rest) a.at(r, c) -= a.at(r, piv) * a.at(piv, c) * inv;
      act = rest;
      continue;
    }
    // all active diagonals vanish: hunt an off-diagonal entry
    int bi = -1, bj = -1;
    for (size_t s = 0; s < act.size() && bi < 0; ++s)
      for (size_t t = s + 1; t < act.size(); ++t)
        if (sgn(a.at(act[s], act[t])) != 0) {
          bi = act[s];
          bj = act[t];
          break;
        }
    if (bi < 0) {
      out.zero += int(act.size());
      break;
    }
    out.positive += 1;
    out.negative += 1;
    Rational inv = Rational(1) / a.at(bi, bj);
    std::vector<int> rest;
    for (int i : act)
      if (i != bi && i != bj) rest.push_back(i);
    for (int r : rest)
      for (int c : rest)
        a.at(r, c) -= (a.at(r, bi) * a.at(bj, c) + a.at(r, bj) * a.at(bi, c)) * inv;
    act = rest;
  }
  return out;
}

inline int corank(const SymmetricForm& q) { return inertia(q).zero; }
inline int negative_index(const SymmetricForm& q) { return inertia(q).negative; }

// A real linear system of quadrics: r+1 independent symmetric forms of size
// (N+1) x (N+1); x in P^r parametrizes members x -> sum x_i Q_i.
struct Net {
  int N = 0;  // ambient projective dimension
  int r = 0;  // system dimension (r = 2 for a net)
  std::vector<SymmetricForm> members;

  void validate() const {
    if (int(members.size()) != r + 1)
      throw std::invalid_argument("net: wrong number of members");
    for (const auto& m : members)
      if (m.dim() != N + 1) throw std::invalid_argument("net: member size");
    // injectivity of x -> q_x: members independent as vectors
    int n1 = N + 1;
    QMat v(r + 1, n1 * (n1 + 1) / 2);
    for (int k = 0; k <= r; ++k) {
      int col = 0;
      for (int i = 0; i < n1; ++i)
        for (int j = i; j < n1; ++j) v.at(k, col++) = members[k].at(i, j);
    }
    if (rank(v) != r + 1)
      throw std::invalid_argument("net: members are linearly dependent");
  }
};

inline SymmetricForm evaluate(const Net& net, const std::vector<Rational>& x) {
  if (int(x.size()) != net.r + 1)
    throw std::invalid_argument("evaluate: coordinate size");
  bool allzero = true;
  for (const auto& c : x)
    if (sgn(c) != 0) allzero = false;
  if (allzero) throw std::invalid_argument("evaluate: zero parameter vector");
  SymmetricForm acc = net.members[0] * x[0];
  for (int i = 1; i <= net.r; ++i) acc = acc + net.members[i] * x[i];
  return acc;
}

inline int corank_at(const Net& net, const std::vector<Rational>& x) {
  return corank(evaluate(net, x));
}

}  // namespace qnets
