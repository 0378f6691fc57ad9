#include "spectral/schubert.hpp"

#include <stdexcept>

namespace spectral {

GrassContext::GrassContext(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || k > n) throw std::invalid_argument("Grassmannian requires 1 <= k <= n");
}

bool GrassContext::admits(const Partition& alpha) const {
  return alpha.length() <= rows() && alpha[0] <= cols();
}

CohomologyClass CohomologyClass::schubert(GrassContext ctx, const Partition& alpha) {
  CohomologyClass out(ctx);
  out.add(alpha, 1);
  return out;
}

Integer CohomologyClass::coefficient(const Partition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CohomologyClass::add(const Partition& alpha, const Integer& coeff) {
  if (!ctx_.admits(alpha)) {
    throw std::invalid_argument("Schubert class " + to_string(alpha) + " is outside the " +
                                std::to_string(ctx_.rows()) + "x" + std::to_string(ctx_.cols()) +
                                " rectangle");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string to_string(const CohomologyClass& x) {
  SymExpansion s(Basis::schur);
  for (const auto& [alpha, c] : x.terms()) s.add(alpha, Rational(c));
  return to_string(s);
}

Partition point_class(const GrassContext& ctx) {
  if (ctx.cols() == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(ctx.rows()), ctx.cols()));
}

CohomologyClass truncate(const SymExpansion& x, const GrassContext& ctx) {
  if (x.basis() != Basis::schur) throw std::invalid_argument("truncate expects the s basis");
  if (!x.homogeneous()) throw std::invalid_argument("truncate expects a homogeneous expansion");
  CohomologyClass out(ctx);
  for (const auto& [alpha, c] : x.terms()) {
    if (!is_integral(c)) {
      throw std::invalid_argument("coefficient " + c.str() + " of s" + to_string(alpha) +
                                  " is not an integer");
    }
    if (ctx.admits(alpha)) out.add(alpha, numerator_of(c));
  }
  return out;
}

namespace {

SymExpansion lift(const CohomologyClass& x) {
  SymExpansion out(Basis::schur);
  for (const auto& [alpha, c] : x.terms()) out.add(alpha, Rational(c));
  return out;
}

SymExpansion keep_in_rectangle(const SymExpansion& x, const GrassContext& ctx) {
  SymExpansion out(Basis::schur);
  for (const auto& [alpha, c] : x.terms()) {
    if (ctx.admits(alpha)) out.add(alpha, c);
  }
  return out;
}

}  // namespace

CohomologyClass multiply(const CohomologyClass& x, const CohomologyClass& y) {
  if (!(x.context() == y.context())) throw std::invalid_argument("multiply: Grassmannian mismatch");
  const GrassContext& ctx = x.context();
  const SymExpansion base = lift(x);
  SymExpansion product(Basis::schur);
  product.mark_inhomogeneous();
  std::map<Partition, SymExpansion> base_times_h;
  for (const auto& [beta, cb] : y.terms()) {
    const SymExpansion jt = jacobi_trudi(beta);
    for (const auto& [gamma, cg] : jt.terms()) {
      auto it = base_times_h.find(gamma);
      if (it == base_times_h.end()) {
        SymExpansion acc = base;
        acc.mark_inhomogeneous();
        for (int part : gamma.parts()) {
          acc = keep_in_rectangle(pieri_multiply(acc, PieriKind::complete, part), ctx);
          acc.mark_inhomogeneous();
        }
        it = base_times_h.emplace(gamma, std::move(acc)).first;
      }
      product += (Rational(cb) * cg) * it->second;
    }
  }
  CohomologyClass out(ctx);
  for (const auto& [alpha, c] : product.terms()) out.add(alpha, to_integer(c));
  return out;
}

int duality_pairing(const Partition& alpha, const Partition& beta, const GrassContext& ctx) {
  if (!ctx.admits(alpha) || !ctx.admits(beta)) {
    throw std::invalid_argument("duality_pairing: partitions must fit in the rectangle");
  }
  if (alpha.weight() + beta.weight() != ctx.dimension()) {
    throw std::invalid_argument("duality_pairing: weights must add up to k(n-k)");
  }
  if (ctx.cols() == 0) return 1;
  return complement(alpha, Rectangle(ctx.rows(), ctx.cols())) == beta ? 1 : 0;
}

bool product_nonzero_with(const Partition& alpha, const Partition& nu, const GrassContext& ctx) {
  if (!ctx.admits(alpha) || !ctx.admits(nu)) {
    throw std::invalid_argument("product_nonzero_with: partitions must fit in the rectangle");
  }
  if (ctx.cols() == 0) return true;
  return contains(nu, complement(alpha, Rectangle(ctx.rows(), ctx.cols())));
}

bool cup_product_nonzero(const Partition& alpha, const Partition& nu, const GrassContext& ctx) {
  if (!ctx.admits(alpha) || !ctx.admits(nu)) {
    throw std::invalid_argument("cup_product_nonzero: partitions must fit in the rectangle");
  }
  if (ctx.cols() == 0) return true;
  return contains(complement(alpha, Rectangle(ctx.rows(), ctx.cols())), nu);
}

}  // namespace spectral
