#pragma once

#include "spectral/partition.hpp"
#include "spectral/rational.hpp"
#include "spectral/schubert.hpp"
#include "spectral/symmetric_functions.hpp"

namespace spectral {

/// Pullback along V -> V (x) B from H*(Gr(k d_B, d_A d_B)) to H*(Gr(k, d_A)).
struct PhiContext {
  int d_A;
  int d_B;
  int k;

  PhiContext(int d_A_, int d_B_, int k_);
  GrassContext source() const { return GrassContext(k * d_B, d_A * d_B); }
  GrassContext target() const { return GrassContext(k, d_A); }
};

/// phi*(s_pi) before truncation, in the s basis: s_pi is written in power sums,
/// each p_mu is scaled by d_B^len(mu), and the result is converted back.
/// Every coefficient is checked to be a nonnegative integer (InternalError
/// otherwise).
SymExpansion phi_star_expansion(const Partition& pi, int d_B);

/// phi*(sigma_pi) as a class on the target Grassmannian. Throws
/// std::invalid_argument if pi is outside the source rectangle.
CohomologyClass phi_star_schur(const Partition& pi, const PhiContext& pc);

/// Multiplicity of V_nu in V_pi (x) (C^{d_B})^{(x)n} computed from characters:
/// sum_mu chi^pi(mu) chi^nu(mu) d_B^len(mu) / z(mu).
Integer phi_multiplicity(const Partition& pi, const Partition& nu, int d_B);

}  // namespace spectral
