#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spectral/rational.hpp"

namespace spectral {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Sign tests for the simplex. Exact for Rational; floating scalars use a
/// fixed absolute tolerance.
template <typename Scalar>
struct PivotTraits {
  static bool is_zero(const Scalar& x) { return x == Scalar(0); }
  static bool is_positive(const Scalar& x) { return x > Scalar(0); }
};

template <>
struct PivotTraits<double> {
  static constexpr double eps = 1e-11;
  static bool is_zero(double x) { return std::abs(x) <= eps; }
  static bool is_positive(double x) { return x > eps; }
};

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Scalar value{};
  Vector<Scalar> x;
};

namespace detail {

/// Dense simplex tableau. Row m holds the reduced costs of a maximization;
/// column `cols` holds the right-hand side.
template <typename Scalar>
class Tableau {
  using Traits = PivotTraits<Scalar>;

 public:
  Tableau(Matrix<Scalar> t, std::vector<int> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  Matrix<Scalar>& data() { return t_; }
  const Matrix<Scalar>& data() const { return t_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int row, int col) {
    const Scalar inv = Scalar(1) / t_(row, col);
    std::vector<int> nz;
    for (int j = 0; j <= cols(); ++j) {
      if (!Traits::is_zero(t_(row, j))) {
        t_(row, j) *= inv;
        nz.push_back(j);
      } else {
        t_(row, j) = Scalar(0);
      }
    }
    for (int i = 0; i <= rows(); ++i) {
      if (i == row) continue;
      const Scalar factor = t_(i, col);
      if (Traits::is_zero(factor)) continue;
      for (int j : nz) t_(i, j) -= factor * t_(row, j);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  /// Runs Bland's rule on columns [0, active_cols). Returns false if unbounded.
  bool optimize(int active_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < active_cols; ++j) {
        // Objective row stores -reduced cost; negative entries improve.
        if (Traits::is_positive(-t_(rows(), j))) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Scalar best_ratio{};
      for (int i = 0; i < rows(); ++i) {
        if (!Traits::is_positive(t_(i, enter))) continue;
        const Scalar ratio = t_(i, cols()) / t_(i, enter);
        if (leave < 0 || ratio < best_ratio ||
            (!(best_ratio < ratio) && basis_[static_cast<std::size_t>(i)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

 private:
  Matrix<Scalar> t_;
  std::vector<int> basis_;
};

}  // namespace detail

/// maximize c.x subject to A x = b, x >= 0.
///
/// Two-phase tableau simplex with Bland's anti-cycling rule. Rows with b < 0
/// are negated, phase one drives one artificial per row out of the basis, and
/// rows left with a zero artificial and no other support are dropped as
/// linearly dependent.
template <typename Scalar>
LpSolution<Scalar> solve_standard_form(const Matrix<Scalar>& A, const Vector<Scalar>& b,
                                       const Vector<Scalar>& c) {
  using Traits = PivotTraits<Scalar>;
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n) throw std::invalid_argument("solve_standard_form: shape mismatch");

  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, n + m + 1);
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const bool flip = b(i) < Scalar(0);
    for (int j = 0; j < n; ++j) t(i, j) = flip ? Scalar(-A(i, j)) : A(i, j);
    t(i, n + i) = Scalar(1);
    t(i, n + m) = flip ? Scalar(-b(i)) : b(i);
    basis[static_cast<std::size_t>(i)] = n + i;
  }
  // Phase one: maximize -sum(artificials). Objective row holds -c_B B^-1 A + c.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t(m, j) -= t(i, j);
    t(m, n + m) -= t(i, n + m);
  }
  detail::Tableau<Scalar> tab(std::move(t), std::move(basis));
  tab.optimize(n + m);

  LpSolution<Scalar> out;
  if (!Traits::is_zero(tab.data()(m, n + m))) {
    out.status = LpStatus::infeasible;
    return out;
  }

  // Pivot remaining (zero-valued) artificials out of the basis.
  std::vector<bool> dependent(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    if (tab.basis()[static_cast<std::size_t>(i)] < n) continue;
    int col = -1;
    for (int j = 0; j < n; ++j) {
      if (!Traits::is_zero(tab.data()(i, j))) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(i, col);
    } else {
      dependent[static_cast<std::size_t>(i)] = true;
    }
  }

  // Phase two on the original columns; artificials stay frozen at zero.
  auto& data = tab.data();
  for (int i = 0; i < m; ++i) {
    if (dependent[static_cast<std::size_t>(i)]) {
      data.row(i).setZero();
      tab.basis()[static_cast<std::size_t>(i)] = n + i;
    }
  }
  for (int j = 0; j <= n + m; ++j) data(m, j) = Scalar(0);
  for (int j = 0; j < n; ++j) data(m, j) = Scalar(-c(j));
  for (int i = 0; i < m; ++i) {
    const int bj = tab.basis()[static_cast<std::size_t>(i)];
    if (bj >= n) continue;
    const Scalar cb = c(bj);
    if (Traits::is_zero(cb)) continue;
    for (int j = 0; j <= n + m; ++j) data(m, j) += cb * data(i, j);
  }
  if (!tab.optimize(n)) {
    out.status = LpStatus::unbounded;
    return out;
  }

  out.status = LpStatus::optimal;
  out.x = Vector<Scalar>::Zero(n);
  for (int i = 0; i < m; ++i) {
    const int bj = tab.basis()[static_cast<std::size_t>(i)];
    if (bj < n) out.x(bj) = data(i, n + m);
  }
  out.value = data(m, n + m);
  return out;
}

/// Result of maximizing a linear form over a boxed homogeneous cone.
template <typename Scalar>
struct BoxMaximum {
  Scalar value{};
  /// Nonnegative multipliers on [le rows; eq rows; -eq rows; x <= 1; -x <= 1]
  /// certifying the bound (a dual optimal solution).
  Vector<Scalar> multipliers;
};

/// max objective.x subject to le_rows x <= 0, eq_rows x = 0 and -1 <= x <= 1.
///
/// Solved through the dual, min sum(box multipliers) s.t. G^T y = objective,
/// y >= 0, whose tableau has one row per variable however many constraints
/// the cone carries. The origin is primal feasible and the box bounds the
/// primal, so the dual always has an optimum; failure is an InternalError.
template <typename Scalar>
BoxMaximum<Scalar> box_maximum(const Matrix<Scalar>& le_rows, const Matrix<Scalar>& eq_rows,
                               const Vector<Scalar>& objective) {
  const int dim = static_cast<int>(objective.size());
  if ((le_rows.rows() > 0 && le_rows.cols() != dim) || (eq_rows.rows() > 0 && eq_rows.cols() != dim)) {
    throw std::invalid_argument("box_maximum: constraint width does not match the objective");
  }
  const int n_le = static_cast<int>(le_rows.rows());
  const int n_eq = static_cast<int>(eq_rows.rows());
  const int n_cols = n_le + 2 * n_eq + 2 * dim;

  Matrix<Scalar> G_t = Matrix<Scalar>::Zero(dim, n_cols);
  int col = 0;
  for (int r = 0; r < n_le; ++r, ++col) G_t.col(col) = le_rows.row(r).transpose();
  for (int r = 0; r < n_eq; ++r, ++col) G_t.col(col) = eq_rows.row(r).transpose();
  for (int r = 0; r < n_eq; ++r, ++col) G_t.col(col) = -eq_rows.row(r).transpose();
  Vector<Scalar> cost = Vector<Scalar>::Zero(n_cols);
  for (int i = 0; i < dim; ++i, ++col) {
    G_t(i, col) = Scalar(1);
    cost(col) = Scalar(-1);
  }
  for (int i = 0; i < dim; ++i, ++col) {
    G_t(i, col) = Scalar(-1);
    cost(col) = Scalar(-1);
  }

  auto dual = solve_standard_form<Scalar>(G_t, objective, cost);
  if (dual.status != LpStatus::optimal) {
    throw InternalError("box_maximum: dual problem has no optimum");
  }
  return {Scalar(-dual.value), std::move(dual.x)};
}

}  // namespace spectral
