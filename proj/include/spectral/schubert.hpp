#pragma once

#include <map>
#include <string>

#include "spectral/partition.hpp"
#include "spectral/rational.hpp"
#include "spectral/symmetric_functions.hpp"

namespace spectral {

/// Gr(k, n): k-dimensional subspaces of C^n. Schubert classes are indexed by
/// partitions in the k x (n-k) rectangle.
struct GrassContext {
  int k;
  int n;

  GrassContext(int k_, int n_);
  int rows() const { return k; }
  int cols() const { return n - k; }
  /// Complex dimension k(n-k); the weight of the point class.
  int dimension() const { return k * (n - k); }
  bool admits(const Partition& alpha) const;
  bool operator==(const GrassContext&) const = default;
};

/// Integer combination of Schubert classes in H*(Gr(k, n)).
class CohomologyClass {
 public:
  using Terms = std::map<Partition, Integer>;

  explicit CohomologyClass(GrassContext ctx) : ctx_(ctx) {}
  static CohomologyClass schubert(GrassContext ctx, const Partition& alpha);

  const GrassContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition& alpha) const;

  /// Throws std::invalid_argument if alpha is outside the rectangle.
  void add(const Partition& alpha, const Integer& coeff);

  bool operator==(const CohomologyClass& other) const {
    return ctx_ == other.ctx_ && terms_ == other.terms_;
  }

 private:
  GrassContext ctx_;
  Terms terms_;
};

/// Same layout as the s-basis expansion text.
std::string to_string(const CohomologyClass& x);

/// Full rectangle: the class of a point.
Partition point_class(const GrassContext& ctx);

/// Image of a Schur expansion: keeps exactly the terms inside the rectangle.
/// Rejects non-Schur input, inhomogeneous input and non-integral coefficients.
CohomologyClass truncate(const SymExpansion& x, const GrassContext& ctx);

/// Cup product. y is lifted through Jacobi-Trudi, x is multiplied by Pieri
/// steps and the result truncated after each step.
CohomologyClass multiply(const CohomologyClass& x, const CohomologyClass& y);

/// sigma_alpha . sigma_beta at complementary weights: 1 iff beta is the
/// rectangle complement of alpha.
int duality_pairing(const Partition& alpha, const Partition& beta, const GrassContext& ctx);

/// True iff nu contains the rectangle complement of alpha, the dominance test
/// that ranks inequalities sharing alpha: nu = complement(alpha) is the
/// strongest member of the family. This is not the cup-product criterion, see
/// cup_product_nonzero.
bool product_nonzero_with(const Partition& alpha, const Partition& nu, const GrassContext& ctx);

/// sigma_alpha . sigma_nu != 0 iff nu is contained in the complement of alpha.
bool cup_product_nonzero(const Partition& alpha, const Partition& nu, const GrassContext& ctx);

}  // namespace spectral
