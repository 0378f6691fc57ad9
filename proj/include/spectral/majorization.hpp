#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spectral/linear_program.hpp"
#include "spectral/rational.hpp"
#include "spectral/spectral_inequalities.hpp"

namespace spectral {

/// q is majorized by p (q ≺ p): equal totals and every partial sum of
/// sorted-descending q is at most that of p. Comparisons allow slack `tol`,
/// which should stay 0 for exact scalars.
template <typename Scalar>
bool majorizes(std::vector<Scalar> p, std::vector<Scalar> q, const Scalar& tol = Scalar(0)) {
  if (p.size() != q.size()) throw std::invalid_argument("majorizes: vectors differ in length");
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(q.begin(), q.end(), std::greater<>());
  Scalar sp(0), sq(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    sp += p[i];
    sq += q[i];
    if (sq > sp + tol) return false;
  }
  const Scalar gap = sp - sq;
  return !(gap > tol) && !(-gap > tol);
}

/// Sums successive blocks of n entries. A length not divisible by n leaves a
/// shorter final block.
template <typename Scalar>
std::vector<Scalar> block_sum(const std::vector<Scalar>& v, int n) {
  if (n < 1) throw std::invalid_argument("block_sum: block size must be positive");
  std::vector<Scalar> out;
  for (std::size_t start = 0; start < v.size(); start += static_cast<std::size_t>(n)) {
    Scalar s(0);
    for (std::size_t i = start; i < std::min(v.size(), start + static_cast<std::size_t>(n)); ++i) s += v[i];
    out.push_back(s);
  }
  return out;
}

/// Nielsen's criterion: a bipartite pure state with Schmidt coefficients src can
/// be turned into one with dst by LOCC iff src ≺ dst. The shorter vector is
/// padded with zeros; negative entries are rejected.
bool nielsen_feasible(const Spectrum& src, const Spectrum& dst, double tol = 1e-12);

/// Exact doubly stochastic matrix D with q = D p, built from T-transforms.
/// Throws std::invalid_argument unless q ≺ p.
Matrix<Rational> doubly_stochastic_between(const std::vector<Rational>& p, const std::vector<Rational>& q);

struct BirkhoffTerm {
  Rational weight;
  /// perm[i] = column of the 1 in row i.
  std::vector<int> perm;
};

/// Greedy peeling into permutation matrices: sum of weight * P_perm equals D.
/// Throws std::invalid_argument if D is not doubly stochastic.
std::vector<BirkhoffTerm> birkhoff_decompose(const Matrix<Rational>& D);

/// sum_K mu_k <= sum_i w_i p_i, with w_i = sum_{j in J_i} lambda_j already
/// collected.
struct WeightedInequality {
  Rational lhs;
  std::vector<Rational> weights;
};

/// For every sample that holds for each permutation of p in a Birkhoff
/// decomposition of the q ≺ p mixing, checks that it holds for q, using the
/// convex combination q_i = sum_pi c_pi p_{pi(i)} (verified exactly). Throws
/// std::invalid_argument unless q ≺ p.
bool flattening_implies(const std::vector<Rational>& p, const std::vector<Rational>& q,
                        const std::vector<WeightedInequality>& samples);

}  // namespace spectral
