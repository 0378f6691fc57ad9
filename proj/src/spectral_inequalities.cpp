#include "spectral/spectral_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "spectral/pullback.hpp"
#include "spectral/symmetric_functions.hpp"

namespace spectral {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw std::invalid_argument("spectrum entries must be finite");
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw std::invalid_argument("spectrum must be sorted non-increasing");
    }
  }
}

Spectrum Spectrum::from_unsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum(std::move(values));
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

SpectralInequality::SpectralInequality(BinaryString lhs_, BinaryString rhs_, Sense sense_)
    : lhs(std::move(lhs_)), rhs(std::move(rhs_)), sense(sense_) {
  if (lhs.size() == 0 || rhs.size() % lhs.size() != 0) {
    throw std::invalid_argument("inequality masks must have lengths d_A and d_A*d_B");
  }
  if (lhs.weight() * d_B() != rhs.weight()) {
    throw std::invalid_argument("inequality masks must satisfy weight(lhs)*d_B = weight(rhs)");
  }
}

namespace {

std::string side_text(const BinaryString& mask, const char* prefix) {
  std::string out;
  for (int i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    if (!out.empty()) out += "+";
    out += prefix + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

BinaryString parse_side(std::string_view text, int n, char prefix) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  text = trim(text);
  if (text == "0") return BinaryString(std::move(bits));
  while (!text.empty()) {
    auto plus = text.find('+');
    std::string_view tok = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
    if (prefix != 0) {
      if (tok.empty() || tok.front() != prefix) {
        throw std::invalid_argument("expected '" + std::string(1, prefix) + "' index, got '" +
                                    std::string(tok) + "'");
      }
      tok.remove_prefix(1);
    }
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(std::string(tok), &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad index '" + std::string(tok) + "'");
    }
    if (idx < 1 || idx > n) throw std::invalid_argument("index " + std::to_string(idx) + " out of range");
    bits[static_cast<std::size_t>(idx - 1)] = 1;
  }
  return BinaryString(std::move(bits));
}

BinaryString flip_bits(const BinaryString& s) {
  std::vector<std::uint8_t> bits(s.bits());
  for (auto& b : bits) b = static_cast<std::uint8_t>(1 - b);
  return BinaryString(std::move(bits));
}

BinaryString reversed(const BinaryString& s) {
  std::vector<std::uint8_t> bits(s.bits().rbegin(), s.bits().rend());
  return BinaryString(std::move(bits));
}

Sense opposite(Sense s) { return s == Sense::le ? Sense::ge : Sense::le; }

}  // namespace

std::string to_string(const SpectralInequality& q) {
  return side_text(q.lhs, "t") + (q.sense == Sense::le ? " <= " : " >= ") + side_text(q.rhs, "");
}

SpectralInequality parse_inequality(std::string_view text, int d_A, int d_B) {
  if (d_A < 1 || d_B < 1) throw std::invalid_argument("parse_inequality: dimensions must be positive");
  auto pos = text.find("<=");
  Sense sense = Sense::le;
  if (pos == std::string_view::npos) {
    pos = text.find(">=");
    sense = Sense::ge;
  }
  if (pos == std::string_view::npos) throw std::invalid_argument("inequality needs '<=' or '>='");
  return SpectralInequality(parse_side(text.substr(0, pos), d_A, 't'),
                            parse_side(text.substr(pos + 2), d_A * d_B, 0), sense);
}

SpectralInequality dualize(const SpectralInequality& q) {
  return SpectralInequality(flip_bits(q.lhs), flip_bits(q.rhs), opposite(q.sense));
}

SpectralInequality mirror(const SpectralInequality& q) {
  return SpectralInequality(reversed(q.lhs), reversed(q.rhs), opposite(q.sense));
}

SpectralInequality canonical(const SpectralInequality& q) {
  const SpectralInequality d = dualize(q);
  if (d.lhs.weight() < q.lhs.weight()) return d;
  if (q.lhs.weight() < d.lhs.weight()) return q;
  return q.sense == Sense::le ? q : d;
}

std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::basic:
      return "basic";
    case Origin::candidate:
      return "candidate";
    case Origin::mirror:
      return "mirror";
  }
  return "?";
}

InequalitySystem::InequalitySystem(int d_A, int d_B) : d_A_(d_A), d_B_(d_B) {
  if (d_A < 1 || d_B < 1) throw std::invalid_argument("InequalitySystem: dimensions must be positive");
}

bool InequalitySystem::add(const SpectralInequality& q) {
  if (q.d_A() != d_A_ || q.d_B() != d_B_) {
    throw std::invalid_argument("inequality " + to_string(q) + " does not match (d_A, d_B) = (" +
                                std::to_string(d_A_) + ", " + std::to_string(d_B_) + ")");
  }
  if (contains(q)) return false;
  inequalities_.push_back(canonical(q));
  return true;
}

bool InequalitySystem::contains(const SpectralInequality& q) const {
  const SpectralInequality c = canonical(q);
  return std::find(inequalities_.begin(), inequalities_.end(), c) != inequalities_.end();
}

bool InequalitySystem::same_members(const InequalitySystem& other) const {
  if (d_A_ != other.d_A_ || d_B_ != other.d_B_) return false;
  std::set<SpectralInequality> a(inequalities_.begin(), inequalities_.end());
  std::set<SpectralInequality> b(other.inequalities_.begin(), other.inequalities_.end());
  return a == b;
}

SpectralInequality basic_inequality(int d_A, int d_B, int k) {
  if (d_A < 1 || d_B < 1) throw std::invalid_argument("basic_inequality: dimensions must be positive");
  if (k < 1 || k > d_A) throw std::invalid_argument("basic_inequality: requires 1 <= k <= d_A");
  return SpectralInequality(string_from_partition(Partition{}, d_A, k),
                            string_from_partition(Partition{}, d_A * d_B, k * d_B));
}

InequalitySystem basic_system(int d_A, int d_B) {
  InequalitySystem out(d_A, d_B);
  for (int k = 1; k < d_A; ++k) out.add(basic_inequality(d_A, d_B, k));
  return out;
}

std::vector<Candidate> generate_candidates(int d_A, int d_B) {
  if (d_A < 2 || d_B < 1) throw std::invalid_argument("generate_candidates requires d_A >= 2, d_B >= 1");
  std::vector<Candidate> out;
  std::set<std::pair<BinaryString, BinaryString>> seen;
  std::map<Partition, SymExpansion> phi_cache;
  for (int k = 1; k <= d_A / 2; ++k) {
    const Rectangle target(k, d_A - k);
    const Rectangle source(k * d_B, (d_A - k) * d_B);
    std::vector<Candidate> block;
    for (int w = 0; w <= target.area(); ++w) {
      const auto sources = enumerate_in_rectangle(source, w);
      for (const auto& nu : enumerate_in_rectangle(target, w)) {
        for (const auto& pi : sources) {
          auto it = phi_cache.find(pi);
          if (it == phi_cache.end()) it = phi_cache.emplace(pi, phi_star_expansion(pi, d_B)).first;
          const Rational c = it->second.coefficient(nu);
          if (c == 0) continue;
          SpectralInequality q(string_from_partition(nu, d_A, k),
                               string_from_partition(pi, d_A * d_B, k * d_B));
          if (!seen.emplace(q.lhs, q.rhs).second) continue;
          block.push_back({std::move(q), Provenance{Origin::candidate, k, nu, pi, to_integer(c)}});
        }
      }
    }
    std::sort(block.begin(), block.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.provenance.nu, a.provenance.pi) < std::tie(b.provenance.nu, b.provenance.pi);
    });
    for (auto& c : block) out.push_back(std::move(c));
  }
  return out;
}

Vector<Rational> inequality_form(const SpectralInequality& q) {
  const int d_A = q.d_A();
  const int n = q.rhs.size();
  Vector<Rational> row = Vector<Rational>::Zero(d_A + n);
  const Rational sign = q.sense == Sense::le ? 1 : -1;
  for (int i = 0; i < d_A; ++i) {
    if (q.lhs[i]) row(i) = sign;
  }
  for (int j = 0; j < n; ++j) {
    if (q.rhs[j]) row(d_A + j) = -sign;
  }
  return row;
}

namespace {

struct Cone {
  Matrix<Rational> le_rows;
  Matrix<Rational> eq_rows;
};

/// Ordering chains, trace and every member except `skip`.
Cone build_cone(int d_A, int d_B, const std::vector<SpectralInequality>& members, int skip = -1) {
  const int n = d_A * d_B;
  const int dim = d_A + n;
  const int chains = (d_A - 1) + (n - 1);
  const int kept = static_cast<int>(members.size()) - (skip >= 0 ? 1 : 0);
  Cone cone;
  cone.le_rows = Matrix<Rational>::Zero(chains + kept, dim);
  int r = 0;
  for (int i = 0; i + 1 < d_A; ++i, ++r) {
    cone.le_rows(r, i + 1) = 1;
    cone.le_rows(r, i) = -1;
  }
  for (int j = 0; j + 1 < n; ++j, ++r) {
    cone.le_rows(r, d_A + j + 1) = 1;
    cone.le_rows(r, d_A + j) = -1;
  }
  for (int m = 0; m < static_cast<int>(members.size()); ++m) {
    if (m == skip) continue;
    cone.le_rows.row(r++) = inequality_form(members[static_cast<std::size_t>(m)]).transpose();
  }
  cone.eq_rows = Matrix<Rational>::Zero(1, dim);
  for (int i = 0; i < d_A; ++i) cone.eq_rows(0, i) = 1;
  for (int j = 0; j < n; ++j) cone.eq_rows(0, d_A + j) = -1;
  return cone;
}

Rational boxed_max(const Cone& cone, const SpectralInequality& q) {
  return box_maximum<Rational>(cone.le_rows, cone.eq_rows, inequality_form(q)).value;
}

void require_same_dims(const SpectralInequality& q, const InequalitySystem& S) {
  if (q.d_A() != S.d_A() || q.d_B() != S.d_B()) {
    throw std::invalid_argument("inequality " + to_string(q) + " does not match the system dimensions");
  }
}

}  // namespace

Rational max_violation(const SpectralInequality& q, const InequalitySystem& S) {
  require_same_dims(q, S);
  return boxed_max(build_cone(S.d_A(), S.d_B(), S.inequalities()), q);
}

bool is_redundant(const SpectralInequality& q, const InequalitySystem& S) {
  const Rational v = max_violation(q, S);
  if (v < 0) throw InternalError("boxed maximum is negative although the origin is feasible");
  return v == 0;
}

InequalitySystem prune(const InequalitySystem& S) {
  std::vector<SpectralInequality> kept = S.inequalities();
  for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
    const Cone cone = build_cone(S.d_A(), S.d_B(), kept, i);
    if (boxed_max(cone, kept[static_cast<std::size_t>(i)]) == 0) {
      kept.erase(kept.begin() + i);
    }
  }
  InequalitySystem out(S.d_A(), S.d_B());
  for (const auto& q : kept) out.add(q);
  return out;
}

InequalitySystem full_system(int d_A, int d_B) {
  InequalitySystem out = basic_system(d_A, d_B);
  if (d_A < 2) return out;
  const auto candidates = generate_candidates(d_A, d_B);
  for (const auto& c : candidates) out.add(c.inequality);
  const std::vector<SpectralInequality> members = out.inequalities();
  for (const auto& q : members) out.add(mirror(q));
  return out;
}

InequalitySystem pruned_system(int d_A, int d_B) {
  InequalitySystem first = basic_system(d_A, d_B);
  if (d_A >= 2) {
    for (const auto& c : generate_candidates(d_A, d_B)) first.add(c.inequality);
  }
  InequalitySystem closed = prune(first);
  const std::vector<SpectralInequality> kept = closed.inequalities();
  for (const auto& q : kept) closed.add(mirror(q));
  return prune(closed);
}

bool equivalent_systems(const InequalitySystem& a, const InequalitySystem& b) {
  if (a.d_A() != b.d_A() || a.d_B() != b.d_B()) return false;
  for (const auto& q : a.inequalities()) {
    if (!is_redundant(q, b)) return false;
  }
  for (const auto& q : b.inequalities()) {
    if (!is_redundant(q, a)) return false;
  }
  return true;
}

double inequality_slack(const SpectralInequality& q, const Spectrum& lambda, const Spectrum& lambda_tilde) {
  if (lambda.size() != q.rhs.size() || lambda_tilde.size() != q.lhs.size()) {
    throw std::invalid_argument("inequality_slack: spectrum length does not match the masks");
  }
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < q.lhs.size(); ++i) {
    if (q.lhs[i]) lhs += lambda_tilde[i];
  }
  for (int j = 0; j < q.rhs.size(); ++j) {
    if (q.rhs[j]) rhs += lambda[j];
  }
  return q.sense == Sense::le ? rhs - lhs : lhs - rhs;
}

CheckReport check_spectra(const Spectrum& lambda, const Spectrum& lambda_tilde,
                          const InequalitySystem& S, double tol) {
  if (lambda.size() != S.d_A() * S.d_B() || lambda_tilde.size() != S.d_A()) {
    throw std::invalid_argument("check_spectra: expected spectra of lengths " +
                                std::to_string(S.d_A() * S.d_B()) + " and " + std::to_string(S.d_A()));
  }
  CheckReport report;
  report.trace_gap = lambda_tilde.sum() - lambda.sum();
  if (std::abs(report.trace_gap) > tol) report.violations.push_back({"trace", report.trace_gap});
  for (const auto& q : S.inequalities()) {
    const double slack = inequality_slack(q, lambda, lambda_tilde);
    if (slack < -tol) report.violations.push_back({to_string(q), slack});
  }
  return report;
}

bool large_dB_audit(int d_A, int d_B) {
  if (d_A < 2 || d_B < 1 || 2 * d_B < d_A * d_A) {
    throw std::invalid_argument("large_dB_audit requires d_A >= 2 and d_B >= d_A^2/2");
  }
  const InequalitySystem basic = basic_system(d_A, d_B);
  for (const auto& c : generate_candidates(d_A, d_B)) {
    if (!is_redundant(c.inequality, basic)) return false;
    if (!is_redundant(mirror(c.inequality), basic)) return false;
  }
  return true;
}

}  // namespace spectral
