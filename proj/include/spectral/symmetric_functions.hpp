#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "spectral/partition.hpp"
#include "spectral/rational.hpp"

namespace spectral {

/// Bases of the ring of symmetric functions: monomial m, elementary e,
/// complete homogeneous h, power sum p, Schur s.
enum class Basis { monomial, elementary, complete, power, schur };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

/// Sparse exact combination of basis elements indexed by partitions. Zero
/// coefficients are never stored. All keys share one weight unless the
/// expansion was explicitly marked inhomogeneous.
class SymExpansion {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymExpansion(Basis basis) : basis_(basis) {}
  static SymExpansion single(Basis basis, const Partition& alpha, const Rational& coeff = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Partition& alpha) const;
  void add(const Partition& alpha, const Rational& coeff);

  /// Common weight of the terms; nullopt for the zero expansion.
  std::optional<int> weight() const;
  bool homogeneous() const { return !inhomogeneous_; }
  void mark_inhomogeneous() { inhomogeneous_ = true; }

  SymExpansion& operator+=(const SymExpansion& other);
  SymExpansion& operator-=(const SymExpansion& other);
  SymExpansion& operator*=(const Rational& scalar);

  bool operator==(const SymExpansion& other) const {
    return basis_ == other.basis_ && terms_ == other.terms_;
  }

 private:
  Basis basis_;
  Terms terms_;
  bool inhomogeneous_ = false;
};

SymExpansion operator+(SymExpansion a, const SymExpansion& b);
SymExpansion operator-(SymExpansion a, const SymExpansion& b);
SymExpansion operator*(const Rational& scalar, SymExpansion a);

/// Terms in descending order, e.g. "6 s[2] + 3 s[1,1]" or "-1/2 p[2] + 1/2 p[1,1]".
std::string to_string(const SymExpansion& x);

/// Irreducible character value chi^lambda at the class mu.
struct CharacterValue {
  Partition lambda;
  Partition mu;
  std::int64_t value;
};

/// prod_r r^{m_r} m_r!, the centralizer order of a permutation of cycle type mu.
std::int64_t zmu(const Partition& mu);

/// chi^lambda_mu by the Murnaghan-Nakayama border-strip recursion (memoized,
/// thread-safe). Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// All chi^lambda_mu for lambda, mu partitions of n.
std::vector<CharacterValue> character_table(int n);

/// s_alpha = det(h_{alpha_i - i + j}) expanded in the h basis.
SymExpansion jacobi_trudi(const Partition& alpha);

enum class PieriKind { elementary, complete };

/// x * e_k (vertical strips) or x * h_k (horizontal strips); x in the s basis.
SymExpansion pieri_multiply(const SymExpansion& x, PieriKind kind, int k);

/// The involution e <-> h. Rejects the m basis.
SymExpansion omega(const SymExpansion& x);

/// s_lambda in the p basis. Computed through Jacobi-Trudi and Newton's
/// identities, so it is independent of character().
SymExpansion schur_to_power(const Partition& lambda);

/// p_mu in the s basis, through Newton's identities and Pieri products.
SymExpansion power_to_schur(const Partition& mu);

/// Change of basis routed through p. The m basis is output-only.
SymExpansion convert(const SymExpansion& x, Basis target);

/// Product of two expansions in the same basis. Schur products lift the second
/// factor through Jacobi-Trudi and apply Pieri.
SymExpansion multiply(const SymExpansion& x, const SymExpansion& y);

}  // namespace spectral
