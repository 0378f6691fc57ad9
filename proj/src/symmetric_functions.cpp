#include "spectral/symmetric_functions.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace spectral {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::elementary: return 'e';
    case Basis::complete: return 'h';
    case Basis::power: return 'p';
    case Basis::schur: return 's';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::monomial;
    case 'e': return Basis::elementary;
    case 'h': return Basis::complete;
    case 'p': return Basis::power;
    case 's': return Basis::schur;
    default: throw std::invalid_argument(std::string("unknown basis '") + c + "'");
  }
}

SymExpansion SymExpansion::single(Basis basis, const Partition& alpha, const Rational& coeff) {
  SymExpansion out(basis);
  out.add(alpha, coeff);
  return out;
}

Rational SymExpansion::coefficient(const Partition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymExpansion::add(const Partition& alpha, const Rational& coeff) {
  if (coeff == 0) return;
  if (!inhomogeneous_ && !terms_.empty() && terms_.begin()->first.weight() != alpha.weight()) {
    throw std::invalid_argument("adding a term of weight " + std::to_string(alpha.weight()) +
                                " to a homogeneous expansion of weight " +
                                std::to_string(terms_.begin()->first.weight()));
  }
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> SymExpansion::weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

SymExpansion& SymExpansion::operator+=(const SymExpansion& other) {
  if (other.basis_ != basis_) throw std::invalid_argument("adding expansions in different bases");
  if (other.inhomogeneous_) inhomogeneous_ = true;
  for (const auto& [alpha, c] : other.terms_) add(alpha, c);
  return *this;
}

SymExpansion& SymExpansion::operator-=(const SymExpansion& other) {
  if (other.basis_ != basis_) throw std::invalid_argument("subtracting expansions in different bases");
  if (other.inhomogeneous_) inhomogeneous_ = true;
  for (const auto& [alpha, c] : other.terms_) add(alpha, -c);
  return *this;
}

SymExpansion& SymExpansion::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= scalar;
  return *this;
}

SymExpansion operator+(SymExpansion a, const SymExpansion& b) { return a += b; }
SymExpansion operator-(SymExpansion a, const SymExpansion& b) { return a -= b; }
SymExpansion operator*(const Rational& scalar, SymExpansion a) { return a *= scalar; }

std::string to_string(const SymExpansion& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1) out += mag.str() + " ";
    out += basis_letter(x.basis()) + to_string(alpha);
  }
  return out;
}

std::int64_t zmu(const Partition& mu) {
  std::int64_t z = 1;
  for (int r = 1; r <= mu[0]; ++r) {
    const int m = multiplicity(mu, r);
    for (int i = 1; i <= m; ++i) z *= static_cast<std::int64_t>(r) * i;
  }
  return z;
}

namespace {

int sign_of_length(const Partition& mu) {
  return ((mu.weight() - mu.length()) % 2 == 0) ? 1 : -1;
}

// Character memo keyed on (lambda, mu). Concurrent readers, idempotent inserts.
struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, std::int64_t> values;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

std::int64_t character_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto& memo = character_memo();
  const auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;
  }

  // Beta-set (first-column hook lengths) of lambda; removing a border strip of
  // size r moves one bead down by r, with sign (-1)^(beads jumped over).
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + len - 1 - i;

  const int r = mu[0];
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[static_cast<std::size_t>(i)] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta) {
      if (b > target && b < beta[static_cast<std::size_t>(i)]) ++jumped;
    }
    std::vector<int> next = beta;
    next[static_cast<std::size_t>(i)] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) {
      parts[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j)] - (len - 1 - j);
    }
    const std::int64_t sub = character_rec(Partition(std::move(parts)), rest);
    total += (jumped % 2 == 0) ? sub : -sub;
  }

  std::unique_lock lock(memo.mutex);
  memo.values.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("character: |lambda| = " + std::to_string(lambda.weight()) +
                                " but |mu| = " + std::to_string(mu.weight()));
  }
  return character_rec(lambda, mu);
}

std::vector<CharacterValue> character_table(int n) {
  std::vector<CharacterValue> out;
  const auto parts = partitions_of(n);
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) out.push_back({lambda, mu, character(lambda, mu)});
  }
  return out;
}

namespace {

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return sorted_partition(std::move(parts));
}

void jacobi_trudi_rec(const Partition& alpha, int row, std::vector<bool>& used_cols,
                      std::vector<int>& factors, int sign, SymExpansion& out) {
  const int len = alpha.length();
  if (row == len) {
    out.add(sorted_partition(factors), sign);
    return;
  }
  // Sign of the permutation accumulates as the number of used columns to the
  // right of the chosen one (inversions contributed by this row).
  for (int col = 0; col < len; ++col) {
    if (used_cols[static_cast<std::size_t>(col)]) continue;
    const int index = alpha[row] - row + col;
    if (index < 0) continue;
    int inversions = 0;
    for (int c = col + 1; c < len; ++c) {
      if (used_cols[static_cast<std::size_t>(c)]) ++inversions;
    }
    used_cols[static_cast<std::size_t>(col)] = true;
    if (index > 0) factors.push_back(index);
    jacobi_trudi_rec(alpha, row + 1, used_cols, factors, (inversions % 2 == 0) ? sign : -sign, out);
    if (index > 0) factors.pop_back();
    used_cols[static_cast<std::size_t>(col)] = false;
  }
}

// All beta obtained from alpha by adding k boxes, no two in the same column.
void horizontal_strips(const Partition& alpha, int k, std::vector<Partition>& out) {
  const int len = alpha.length();
  std::vector<int> beta(static_cast<std::size_t>(len + 1));
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == len + 1) {
      if (remaining == 0) out.emplace_back(beta);
      return;
    }
    const int lo = alpha[row];
    const int hi = row == 0 ? alpha[0] + remaining : std::min(alpha[row - 1], alpha[row] + remaining);
    for (int b = hi; b >= lo; --b) {
      beta[static_cast<std::size_t>(row)] = b;
      self(self, row + 1, remaining - (b - lo));
    }
  };
  rec(rec, 0, k);
}

std::vector<Partition> strips(const Partition& alpha, PieriKind kind, int k) {
  std::vector<Partition> out;
  if (kind == PieriKind::complete) {
    horizontal_strips(alpha, k, out);
  } else {
    std::vector<Partition> conj;
    horizontal_strips(conjugate(alpha), k, conj);
    for (const auto& beta : conj) out.push_back(conjugate(beta));
  }
  return out;
}

// Product in a multiplicative basis (e, h, p): basis elements multiply by
// concatenating partitions.
SymExpansion multiply_union(const SymExpansion& x, const SymExpansion& y) {
  SymExpansion out(x.basis());
  if (!x.homogeneous() || !y.homogeneous()) out.mark_inhomogeneous();
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add(merge(a, b), ca * cb);
  }
  return out;
}

SymExpansion relabel(SymExpansion x, Basis basis) {
  SymExpansion out(basis);
  if (!x.homogeneous()) out.mark_inhomogeneous();
  for (const auto& [a, c] : x.terms()) out.add(a, c);
  return out;
}

// h_n = sum_mu p_mu / z(mu); e_n = sum_mu eps(mu) p_mu / z(mu).
SymExpansion single_to_power(Basis basis, int n) {
  SymExpansion out(Basis::power);
  for (const auto& mu : partitions_of(n)) {
    Rational c(1, zmu(mu));
    if (basis == Basis::elementary && sign_of_length(mu) < 0) c = -c;
    out.add(mu, c);
  }
  return out;
}

// p_n in the h basis from n h_n = sum_{i=1}^n p_i h_{n-i}.
const SymExpansion& power_single_in_h(int n) {
  static std::mutex mutex;
  static std::map<int, SymExpansion> cache;
  std::lock_guard lock(mutex);
  std::vector<int> missing;
  for (int m = 1; m <= n; ++m) {
    if (!cache.contains(m)) missing.push_back(m);
  }
  for (int m : missing) {
    SymExpansion pm = SymExpansion::single(Basis::complete, Partition{m}, m);
    for (int i = 1; i < m; ++i) {
      pm -= multiply_union(cache.at(i), SymExpansion::single(Basis::complete, Partition{m - i}));
    }
    cache.emplace(m, std::move(pm));
  }
  return cache.at(n);
}

SymExpansion power_to_complete(const Partition& mu) {
  SymExpansion out = SymExpansion::single(Basis::complete, Partition{});
  for (int part : mu.parts()) out = multiply_union(out, power_single_in_h(part));
  return out;
}

SymExpansion complete_to_schur(const Partition& alpha) {
  SymExpansion out = SymExpansion::single(Basis::schur, Partition{});
  for (int part : alpha.parts()) out = pieri_multiply(out, PieriKind::complete, part);
  return out;
}

SymExpansion elementary_to_schur(const Partition& alpha) {
  SymExpansion out = SymExpansion::single(Basis::schur, Partition{});
  for (int part : alpha.parts()) out = pieri_multiply(out, PieriKind::elementary, part);
  return out;
}

// Number of ways to distribute the parts of mu into len(alpha) labelled
// blocks whose sums are alpha_1, alpha_2, ...; the coefficient of m_alpha in p_mu.
std::int64_t power_monomial_coefficient(const Partition& mu, const Partition& alpha) {
  std::vector<int> room(alpha.parts());
  std::int64_t count = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == mu.length()) {
      if (std::all_of(room.begin(), room.end(), [](int r) { return r == 0; })) ++count;
      return;
    }
    for (auto& r : room) {
      if (r >= mu[i]) {
        r -= mu[i];
        self(self, i + 1);
        r += mu[i];
      }
    }
  };
  rec(rec, 0);
  return count;
}

SymExpansion to_power(const SymExpansion& x) {
  SymExpansion out(Basis::power);
  if (!x.homogeneous()) out.mark_inhomogeneous();
  for (const auto& [alpha, c] : x.terms()) {
    SymExpansion term(Basis::power);
    switch (x.basis()) {
      case Basis::power:
        term = SymExpansion::single(Basis::power, alpha);
        break;
      case Basis::complete:
      case Basis::elementary: {
        term = SymExpansion::single(Basis::power, Partition{});
        for (int part : alpha.parts()) term = multiply_union(term, single_to_power(x.basis(), part));
        break;
      }
      case Basis::schur:
        term = to_power(jacobi_trudi(alpha));
        break;
      case Basis::monomial:
        throw std::invalid_argument("the m basis is supported as an output format only");
    }
    term *= c;
    out += term;
  }
  return out;
}

SymExpansion from_power(const SymExpansion& x, Basis target) {
  SymExpansion out(target);
  if (!x.homogeneous()) out.mark_inhomogeneous();
  for (const auto& [mu, c] : x.terms()) {
    SymExpansion term(target);
    switch (target) {
      case Basis::power:
        term = SymExpansion::single(Basis::power, mu);
        break;
      case Basis::complete:
        term = power_to_complete(mu);
        break;
      case Basis::elementary:
        // omega(p_mu) = eps(mu) p_mu, and omega maps h_alpha to e_alpha.
        term = relabel(power_to_complete(mu), Basis::elementary);
        term *= sign_of_length(mu);
        break;
      case Basis::schur: {
        const SymExpansion in_h = power_to_complete(mu);
        for (const auto& [alpha, d] : in_h.terms()) {
          auto s = complete_to_schur(alpha);
          s *= d;
          term += s;
        }
        break;
      }
      case Basis::monomial:
        for (const auto& alpha : partitions_of(mu.weight())) {
          term.add(alpha, power_monomial_coefficient(mu, alpha));
        }
        break;
    }
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace

SymExpansion jacobi_trudi(const Partition& alpha) {
  SymExpansion out(Basis::complete);
  std::vector<bool> used(static_cast<std::size_t>(alpha.length()), false);
  std::vector<int> factors;
  jacobi_trudi_rec(alpha, 0, used, factors, 1, out);
  return out;
}

SymExpansion pieri_multiply(const SymExpansion& x, PieriKind kind, int k) {
  if (x.basis() != Basis::schur) throw std::invalid_argument("pieri_multiply expects the s basis");
  if (k < 0) throw std::invalid_argument("pieri_multiply expects k >= 0");
  SymExpansion out(Basis::schur);
  if (!x.homogeneous()) out.mark_inhomogeneous();
  for (const auto& [alpha, c] : x.terms()) {
    for (const auto& beta : strips(alpha, kind, k)) out.add(beta, c);
  }
  return out;
}

SymExpansion omega(const SymExpansion& x) {
  switch (x.basis()) {
    case Basis::elementary: return relabel(x, Basis::complete);
    case Basis::complete: return relabel(x, Basis::elementary);
    case Basis::power: {
      SymExpansion out(Basis::power);
      if (!x.homogeneous()) out.mark_inhomogeneous();
      for (const auto& [mu, c] : x.terms()) out.add(mu, sign_of_length(mu) * c);
      return out;
    }
    case Basis::schur: {
      SymExpansion out(Basis::schur);
      if (!x.homogeneous()) out.mark_inhomogeneous();
      for (const auto& [alpha, c] : x.terms()) out.add(conjugate(alpha), c);
      return out;
    }
    case Basis::monomial: break;
  }
  throw std::invalid_argument("omega is not defined on the m basis; convert first");
}

SymExpansion schur_to_power(const Partition& lambda) {
  return to_power(SymExpansion::single(Basis::schur, lambda));
}

SymExpansion power_to_schur(const Partition& mu) {
  return from_power(SymExpansion::single(Basis::power, mu), Basis::schur);
}

SymExpansion convert(const SymExpansion& x, Basis target) {
  if (x.basis() == target) return x;
  if (x.basis() == Basis::complete && target == Basis::schur) {
    SymExpansion out(Basis::schur);
    if (!x.homogeneous()) out.mark_inhomogeneous();
    for (const auto& [alpha, c] : x.terms()) out += c * complete_to_schur(alpha);
    return out;
  }
  if (x.basis() == Basis::elementary && target == Basis::schur) {
    SymExpansion out(Basis::schur);
    if (!x.homogeneous()) out.mark_inhomogeneous();
    for (const auto& [alpha, c] : x.terms()) out += c * elementary_to_schur(alpha);
    return out;
  }
  return from_power(to_power(x), target);
}

SymExpansion multiply(const SymExpansion& x, const SymExpansion& y) {
  if (x.basis() != y.basis()) throw std::invalid_argument("multiply expects a common basis");
  switch (x.basis()) {
    case Basis::elementary:
    case Basis::complete:
    case Basis::power:
      return multiply_union(x, y);
    case Basis::schur: {
      SymExpansion out(Basis::schur);
      if (!x.homogeneous() || !y.homogeneous()) out.mark_inhomogeneous();
      std::map<Partition, SymExpansion> x_times_h;
      for (const auto& [beta, cb] : y.terms()) {
        const SymExpansion jt = jacobi_trudi(beta);
        for (const auto& [gamma, cg] : jt.terms()) {
          auto it = x_times_h.find(gamma);
          if (it == x_times_h.end()) {
            SymExpansion prod = x;
            for (int part : gamma.parts()) prod = pieri_multiply(prod, PieriKind::complete, part);
            it = x_times_h.emplace(gamma, std::move(prod)).first;
          }
          out += (cb * cg) * it->second;
        }
      }
      return out;
    }
    case Basis::monomial: break;
  }
  throw std::invalid_argument("products in the m basis are not supported");
}

}  // namespace spectral
