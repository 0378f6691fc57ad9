#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spectral/linear_program.hpp"
#include "spectral/partition.hpp"
#include "spectral/rational.hpp"

namespace spectral {

/// Eigenvalues in non-increasing order.
class Spectrum {
 public:
  Spectrum() = default;
  /// Throws std::invalid_argument on non-finite or out-of-order entries.
  explicit Spectrum(std::vector<double> values);
  /// Sorts a copy of the values descending first.
  static Spectrum from_unsorted(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  double sum() const;

 private:
  std::vector<double> values_;
};

enum class Sense { le, ge };

/// sum_{i in lhs} lt_i  (<= or >=)  sum_{j in rhs} l_j, where lt is the spectrum
/// of the reduced state (d_A slots) and l that of the joint state (d_A d_B slots).
struct SpectralInequality {
  BinaryString lhs;
  BinaryString rhs;
  Sense sense = Sense::le;

  SpectralInequality() = default;
  /// Throws std::invalid_argument unless rhs.size() is a multiple of lhs.size()
  /// and weight(lhs) d_B = weight(rhs).
  SpectralInequality(BinaryString lhs_, BinaryString rhs_, Sense sense_ = Sense::le);

  int d_A() const { return lhs.size(); }
  int d_B() const { return rhs.size() / lhs.size(); }

  auto operator<=>(const SpectralInequality&) const = default;
  bool operator==(const SpectralInequality&) const = default;
};

/// Human-readable form, e.g. "t2 <= 1+3" (1-based indices, t = reduced side).
std::string to_string(const SpectralInequality& q);

/// Parses the human-readable form. An empty side is written "0".
SpectralInequality parse_inequality(std::string_view text, int d_A, int d_B);

/// Complements both masks and flips the sense. Equivalent to q under the trace
/// equality.
SpectralInequality dualize(const SpectralInequality& q);

/// The inequality q implies when applied to -rho: both masks are reversed and
/// the sense flips. Not equivalent to q in general.
SpectralInequality mirror(const SpectralInequality& q);

/// Representative of {q, dualize(q)}: smaller lhs weight, ties go to the "<="
/// form.
SpectralInequality canonical(const SpectralInequality& q);

enum class Origin { basic, candidate, mirror };

std::string_view origin_name(Origin o);

struct Provenance {
  Origin origin = Origin::basic;
  /// Grassmannian parameter of the generating pair (0 for mirrors).
  int k = 0;
  Partition nu;
  Partition pi;
  /// Coefficient of sigma_nu in phi*(sigma_pi).
  Integer coefficient = 0;
};

struct Candidate {
  SpectralInequality inequality;
  Provenance provenance;
};

/// Inequalities over the chains lt_1 >= ... >= lt_{d_A}, l_1 >= ... >= l_{d_A d_B}
/// and the trace equality, which are implicit. Members are kept in canonical
/// form; their order is the priority used by prune (earlier is preferred).
class InequalitySystem {
 public:
  InequalitySystem(int d_A, int d_B);

  int d_A() const { return d_A_; }
  int d_B() const { return d_B_; }
  const std::vector<SpectralInequality>& inequalities() const { return inequalities_; }
  int size() const { return static_cast<int>(inequalities_.size()); }

  /// Adds canonical(q) unless it is already present. Returns whether it was
  /// added. Throws std::invalid_argument on a dimension mismatch.
  bool add(const SpectralInequality& q);
  bool contains(const SpectralInequality& q) const;

  /// Same members regardless of order.
  bool same_members(const InequalitySystem& other) const;

 private:
  int d_A_;
  int d_B_;
  std::vector<SpectralInequality> inequalities_;
};

/// sum_{i<=k} lt_i <= sum_{i<=k d_B} l_i for k = 1..d_A-1. The k = d_A member is
/// the trace equality itself.
InequalitySystem basic_system(int d_A, int d_B);

/// Basic inequality for a single k in 1..d_A.
SpectralInequality basic_inequality(int d_A, int d_B, int k);

/// One inequality per (k, nu, pi) with sigma_nu a summand of phi*(sigma_pi),
/// k <= d_A/2, pi in the source rectangle. Sorted by (k, nu, pi), mask pairs
/// deduplicated.
std::vector<Candidate> generate_candidates(int d_A, int d_B);

/// Linear form of q over x = (lt, l): q holds iff form(x) <= 0.
Vector<Rational> inequality_form(const SpectralInequality& q);

/// max of form(q) over the system's cone intersected with the box [-1, 1].
/// Zero iff q is implied by the system.
Rational max_violation(const SpectralInequality& q, const InequalitySystem& S);

bool is_redundant(const SpectralInequality& q, const InequalitySystem& S);

/// Drops members implied by the remaining ones, scanning from the lowest
/// priority. The result describes the same polyhedron and is irredundant.
InequalitySystem prune(const InequalitySystem& S);

/// Basic inequalities, every candidate and every mirror, unpruned.
InequalitySystem full_system(int d_A, int d_B);

/// prune(basic + candidates), closed under mirror, pruned again.
InequalitySystem pruned_system(int d_A, int d_B);

/// True iff both systems describe the same cone: each member of one is
/// implied by the other.
bool equivalent_systems(const InequalitySystem& a, const InequalitySystem& b);

struct Violation {
  std::string constraint;
  /// rhs - lhs for "<=" (negated for ">="); the trace gap for the trace.
  double slack;
};

struct CheckReport {
  double trace_gap = 0.0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// rhs - lhs for "<=", lhs - rhs for ">="; negative means violated.
double inequality_slack(const SpectralInequality& q, const Spectrum& lambda, const Spectrum& lambda_tilde);

/// Evaluates every member and the trace equality. An inequality is violated
/// when its slack is below -tol, the trace when |gap| > tol. Throws
/// std::invalid_argument on length mismatch.
CheckReport check_spectra(const Spectrum& lambda, const Spectrum& lambda_tilde,
                          const InequalitySystem& S, double tol);

/// True iff every non-basic candidate and its mirror are implied by the basic
/// system. Requires 2 d_B >= d_A^2.
bool large_dB_audit(int d_A, int d_B);

}  // namespace spectral
