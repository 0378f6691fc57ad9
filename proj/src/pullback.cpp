#include "spectral/pullback.hpp"

#include <stdexcept>

namespace spectral {

PhiContext::PhiContext(int d_A_, int d_B_, int k_) : d_A(d_A_), d_B(d_B_), k(k_) {
  if (d_A < 1 || d_B < 1) throw std::invalid_argument("PhiContext: dimensions must be positive");
  if (k < 1 || k > d_A) throw std::invalid_argument("PhiContext: requires 1 <= k <= d_A");
}

SymExpansion phi_star_expansion(const Partition& pi, int d_B) {
  if (d_B < 1) throw std::invalid_argument("phi_star_expansion: d_B must be positive");
  SymExpansion scaled(Basis::power);
  const SymExpansion in_power = schur_to_power(pi);
  for (const auto& [mu, c] : in_power.terms()) {
    scaled.add(mu, c * Rational(ipow(Integer(d_B), static_cast<unsigned>(mu.length()))));
  }
  SymExpansion out = convert(scaled, Basis::schur);
  for (const auto& [nu, c] : out.terms()) {
    if (!is_integral(c) || c < 0) {
      throw InternalError("phi* coefficient of s" + to_string(nu) + " is " + c.str() +
                          ", expected a nonnegative integer");
    }
  }
  return out;
}

CohomologyClass phi_star_schur(const Partition& pi, const PhiContext& pc) {
  if (!pc.source().admits(pi)) {
    throw std::invalid_argument("phi_star_schur: " + to_string(pi) + " is outside the " +
                                std::to_string(pc.source().rows()) + "x" +
                                std::to_string(pc.source().cols()) + " source rectangle");
  }
  return truncate(phi_star_expansion(pi, pc.d_B), pc.target());
}

Integer phi_multiplicity(const Partition& pi, const Partition& nu, int d_B) {
  if (pi.weight() != nu.weight()) throw std::invalid_argument("phi_multiplicity: weight mismatch");
  if (d_B < 1) throw std::invalid_argument("phi_multiplicity: d_B must be positive");
  Rational total = 0;
  for (const auto& mu : partitions_of(pi.weight())) {
    const Integer chis = Integer(character(pi, mu)) * character(nu, mu);
    total += Rational(chis * ipow(Integer(d_B), static_cast<unsigned>(mu.length()))) / zmu(mu);
  }
  if (!is_integral(total) || total < 0) {
    throw InternalError("phi multiplicity " + total.str() + " is not a nonnegative integer");
  }
  return numerator_of(total);
}

}  // namespace spectral
