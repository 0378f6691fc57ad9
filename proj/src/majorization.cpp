#include "spectral/majorization.hpp"

#include <numeric>

namespace spectral {

bool nielsen_feasible(const Spectrum& src, const Spectrum& dst, double tol) {
  std::vector<double> a = src.values();
  std::vector<double> b = dst.values();
  for (double v : a) {
    if (v < 0) throw std::invalid_argument("nielsen_feasible: Schmidt coefficients must be nonnegative");
  }
  for (double v : b) {
    if (v < 0) throw std::invalid_argument("nielsen_feasible: Schmidt coefficients must be nonnegative");
  }
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  return majorizes(b, a, tol);
}

namespace {

std::vector<std::size_t> descending_order(const std::vector<Rational>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return order;
}

bool augment(const Matrix<Rational>& D, int row, std::vector<int>& col_owner, std::vector<bool>& seen) {
  for (int c = 0; c < D.cols(); ++c) {
    if (D(row, c) <= 0 || seen[static_cast<std::size_t>(c)]) continue;
    seen[static_cast<std::size_t>(c)] = true;
    int& owner = col_owner[static_cast<std::size_t>(c)];
    if (owner < 0 || augment(D, owner, col_owner, seen)) {
      owner = row;
      return true;
    }
  }
  return false;
}

}  // namespace

Matrix<Rational> doubly_stochastic_between(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (!majorizes(p, q)) throw std::invalid_argument("doubly_stochastic_between: q is not majorized by p");
  const int n = static_cast<int>(p.size());
  const auto op = descending_order(p);
  const auto oq = descending_order(q);
  std::vector<Rational> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = p[op[static_cast<std::size_t>(i)]];
    y[static_cast<std::size_t>(i)] = q[oq[static_cast<std::size_t>(i)]];
  }

  Matrix<Rational> sorted = Matrix<Rational>::Identity(n, n);
  for (;;) {
    int j = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (x[static_cast<std::size_t>(i)] > y[static_cast<std::size_t>(i)]) {
        j = i;
        break;
      }
    }
    if (j < 0) break;
    int k = -1;
    for (int i = j + 1; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)] < y[static_cast<std::size_t>(i)]) {
        k = i;
        break;
      }
    }
    if (k < 0) throw InternalError("T-transform: no receiving coordinate");
    auto& xj = x[static_cast<std::size_t>(j)];
    auto& xk = x[static_cast<std::size_t>(k)];
    const Rational delta = std::min(xj - y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(k)] - xk);
    const Rational s = delta / (xj - xk);
    Matrix<Rational> T = Matrix<Rational>::Identity(n, n);
    T(j, j) = 1 - s;
    T(k, k) = 1 - s;
    T(j, k) = s;
    T(k, j) = s;
    sorted = (T * sorted).eval();
    xj -= delta;
    xk += delta;
  }

  Matrix<Rational> D = Matrix<Rational>::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      D(static_cast<int>(oq[static_cast<std::size_t>(a)]), static_cast<int>(op[static_cast<std::size_t>(b)])) =
          sorted(a, b);
    }
  }
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += D(i, j) * p[static_cast<std::size_t>(j)];
    if (s != q[static_cast<std::size_t>(i)]) throw InternalError("doubly_stochastic_between: D p != q");
  }
  return D;
}

std::vector<BirkhoffTerm> birkhoff_decompose(const Matrix<Rational>& D_in) {
  const int n = static_cast<int>(D_in.rows());
  if (D_in.cols() != n) throw std::invalid_argument("birkhoff_decompose: matrix must be square");
  for (int i = 0; i < n; ++i) {
    Rational rs = 0, cs = 0;
    for (int j = 0; j < n; ++j) {
      if (D_in(i, j) < 0 || D_in(j, i) < 0) throw std::invalid_argument("birkhoff_decompose: negative entry");
      rs += D_in(i, j);
      cs += D_in(j, i);
    }
    if (rs != 1 || cs != 1) throw std::invalid_argument("birkhoff_decompose: matrix is not doubly stochastic");
  }

  Matrix<Rational> D = D_in;
  std::vector<BirkhoffTerm> out;
  Rational remaining = 1;
  while (remaining > 0) {
    std::vector<int> col_owner(static_cast<std::size_t>(n), -1);
    for (int row = 0; row < n; ++row) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      if (!augment(D, row, col_owner, seen)) throw InternalError("birkhoff_decompose: no perfect matching");
    }
    BirkhoffTerm term;
    term.perm.assign(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < n; ++c) term.perm[static_cast<std::size_t>(col_owner[static_cast<std::size_t>(c)])] = c;
    term.weight = D(0, term.perm[0]);
    for (int i = 1; i < n; ++i) term.weight = std::min(term.weight, D(i, term.perm[static_cast<std::size_t>(i)]));
    for (int i = 0; i < n; ++i) D(i, term.perm[static_cast<std::size_t>(i)]) -= term.weight;
    remaining -= term.weight;
    out.push_back(std::move(term));
  }
  return out;
}

bool flattening_implies(const std::vector<Rational>& p, const std::vector<Rational>& q,
                        const std::vector<WeightedInequality>& samples) {
  if (p.size() != q.size()) throw std::invalid_argument("flattening_implies: p and q differ in length");
  const auto terms = birkhoff_decompose(doubly_stochastic_between(p, q));
  const std::size_t n = p.size();

  Rational total = 0;
  for (const auto& t : terms) total += t.weight;
  if (total != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational mixed = 0;
    for (const auto& t : terms) mixed += t.weight * p[static_cast<std::size_t>(t.perm[i])];
    if (mixed != q[i]) return false;
  }

  for (const auto& s : samples) {
    if (s.weights.size() != n) throw std::invalid_argument("flattening_implies: sample weight count mismatch");
    bool premise = true;
    Rational combined = 0;
    for (const auto& t : terms) {
      Rational rhs = 0;
      for (std::size_t i = 0; i < n; ++i) rhs += s.weights[i] * p[static_cast<std::size_t>(t.perm[i])];
      if (s.lhs > rhs) premise = false;
      combined += t.weight * rhs;
    }
    if (!premise) continue;
    Rational at_q = 0;
    for (std::size_t i = 0; i < n; ++i) at_q += s.weights[i] * q[i];
    if (combined != at_q || s.lhs > at_q) return false;
  }
  return true;
}

}  // namespace spectral
