#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral/linear_program.hpp"
#include "spectral/rational.hpp"
#include "spectral/spectral_inequalities.hpp"

namespace spectral {

/// (I, J, K): sorted 1-based index sets of common size r. Encodes
/// sum_K gamma_k <= sum_I alpha_i + sum_J beta_j.
struct HornTriple {
  int r = 0;
  std::vector<int> I;
  std::vector<int> J;
  std::vector<int> K;

  auto operator<=>(const HornTriple&) const = default;
  bool operator==(const HornTriple&) const = default;
};

/// "g3 <= a2+b2".
std::string to_string(const HornTriple& t);

/// sum I + sum J = sum K + r(r+1)/2.
bool horn_balanced(const HornTriple& t);

/// U_r^n: every balanced triple of r-subsets of {1..n}, sorted.
std::vector<HornTriple> horn_candidates(int r, int n);

/// T_r^n, memoized on (r, n). The memo is safe for concurrent callers.
/// Throws std::invalid_argument unless 1 <= r <= n.
const std::vector<HornTriple>& horn_sets(int r, int n);

/// Every triple of T_r^n for r < n, ordered by r then triple. The trace
/// equality accompanies the list implicitly.
std::vector<HornTriple> horn_inequalities(int n);

struct HornReport {
  double trace_gap = 0.0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates the trace equality and every inequality of horn_inequalities(n).
HornReport check_horn(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma, double tol);

/// Linear form over x = (alpha, beta, gamma): the triple holds iff form(x) <= 0.
Vector<Rational> horn_form(const HornTriple& t, int n);

/// Whether list[index] is implied by the other members, the ordering chains
/// and the trace equality.
bool horn_is_redundant(const std::vector<HornTriple>& list, std::size_t index, int n);

/// Indices of members implied by the rest of the list. With stop_at_first,
/// returns after the first hit.
std::vector<std::size_t> redundant_horn_inequalities(int n, bool stop_at_first = false);

}  // namespace spectral
