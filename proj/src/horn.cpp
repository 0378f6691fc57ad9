#include "spectral/horn.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace spectral {

namespace {

std::string join_indices(const std::vector<int>& idx, char prefix) {
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += "+";
    out += prefix + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void subsets_rec(int n, int r, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
    cur.push_back(v);
    subsets_rec(n, r, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, r, 1, cur, out);
  return out;
}

/// sum_{f in F} I_f, with F indexing into the sorted set I.
int sub_sum(const std::vector<int>& set, const std::vector<int>& sub) {
  int s = 0;
  for (int f : sub) s += set[static_cast<std::size_t>(f - 1)];
  return s;
}

std::shared_mutex memo_mutex;
std::map<std::pair<int, int>, std::vector<HornTriple>> memo;

}  // namespace

std::string to_string(const HornTriple& t) {
  return join_indices(t.K, 'g') + " <= " + join_indices(t.I, 'a') + "+" + join_indices(t.J, 'b');
}

bool horn_balanced(const HornTriple& t) {
  return sum_of(t.I) + sum_of(t.J) == sum_of(t.K) + t.r * (t.r + 1) / 2;
}

std::vector<HornTriple> horn_candidates(int r, int n) {
  if (r < 1 || r > n) throw std::invalid_argument("horn_candidates requires 1 <= r <= n");
  const auto sets = subsets(n, r);
  std::map<int, std::vector<const std::vector<int>*>> by_sum;
  for (const auto& s : sets) by_sum[sum_of(s)].push_back(&s);
  std::vector<HornTriple> out;
  for (const auto& I : sets) {
    for (const auto& J : sets) {
      auto it = by_sum.find(sum_of(I) + sum_of(J) - r * (r + 1) / 2);
      if (it == by_sum.end()) continue;
      for (const auto* K : it->second) out.push_back({r, I, J, *K});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<HornTriple>& horn_sets(int r, int n) {
  if (r < 1 || r > n) throw std::invalid_argument("horn_sets requires 1 <= r <= n");
  {
    std::shared_lock lock(memo_mutex);
    auto it = memo.find({r, n});
    if (it != memo.end()) return it->second;
  }
  std::vector<HornTriple> result = horn_candidates(r, n);
  if (r > 1) {
    std::vector<const std::vector<HornTriple>*> lower;
    for (int p = 1; p < r; ++p) lower.push_back(&horn_sets(p, r));
    std::erase_if(result, [&](const HornTriple& t) {
      for (std::size_t pi = 0; pi < lower.size(); ++pi) {
        const int p = static_cast<int>(pi) + 1;
        for (const auto& sub : *lower[pi]) {
          if (sub_sum(t.I, sub.I) + sub_sum(t.J, sub.J) > sub_sum(t.K, sub.K) + p * (p + 1) / 2) {
            return true;
          }
        }
      }
      return false;
    });
  }
  std::unique_lock lock(memo_mutex);
  // Another thread may have inserted the same value meanwhile; either copy wins.
  return memo.try_emplace({r, n}, std::move(result)).first->second;
}

std::vector<HornTriple> horn_inequalities(int n) {
  if (n < 1) throw std::invalid_argument("horn_inequalities requires n >= 1");
  std::vector<HornTriple> out;
  for (int r = 1; r < n; ++r) {
    const auto& t = horn_sets(r, n);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

HornReport check_horn(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma, double tol) {
  const int n = alpha.size();
  if (beta.size() != n || gamma.size() != n) throw std::invalid_argument("check_horn: spectra lengths differ");
  HornReport report;
  if (n == 0) return report;
  report.trace_gap = gamma.sum() - alpha.sum() - beta.sum();
  if (std::abs(report.trace_gap) > tol) report.violations.push_back({"trace", report.trace_gap});
  for (const auto& t : horn_inequalities(n)) {
    double lhs = 0.0, rhs = 0.0;
    for (int k : t.K) lhs += gamma[k - 1];
    for (int i : t.I) rhs += alpha[i - 1];
    for (int j : t.J) rhs += beta[j - 1];
    if (rhs - lhs < -tol) report.violations.push_back({to_string(t), rhs - lhs});
  }
  return report;
}

Vector<Rational> horn_form(const HornTriple& t, int n) {
  Vector<Rational> row = Vector<Rational>::Zero(3 * n);
  for (int i : t.I) row(i - 1) -= 1;
  for (int j : t.J) row(n + j - 1) -= 1;
  for (int k : t.K) row(2 * n + k - 1) += 1;
  return row;
}

namespace {

Matrix<Rational> horn_le_rows(const std::vector<HornTriple>& list, std::size_t skip, int n) {
  const int chains = 3 * (n - 1);
  Matrix<Rational> rows = Matrix<Rational>::Zero(chains + static_cast<int>(list.size()) - 1, 3 * n);
  int r = 0;
  for (int block = 0; block < 3; ++block) {
    for (int i = 0; i + 1 < n; ++i, ++r) {
      rows(r, block * n + i + 1) = 1;
      rows(r, block * n + i) = -1;
    }
  }
  for (std::size_t m = 0; m < list.size(); ++m) {
    if (m == skip) continue;
    rows.row(r++) = horn_form(list[m], n).transpose();
  }
  return rows;
}

Matrix<Rational> horn_trace_row(int n) {
  Matrix<Rational> eq = Matrix<Rational>::Zero(1, 3 * n);
  for (int i = 0; i < 2 * n; ++i) eq(0, i) = -1;
  for (int i = 2 * n; i < 3 * n; ++i) eq(0, i) = 1;
  return eq;
}

}  // namespace

bool horn_is_redundant(const std::vector<HornTriple>& list, std::size_t index, int n) {
  if (index >= list.size()) throw std::out_of_range("horn_is_redundant: index out of range");
  const Rational v =
      box_maximum<Rational>(horn_le_rows(list, index, n), horn_trace_row(n), horn_form(list[index], n)).value;
  if (v < 0) throw InternalError("boxed maximum is negative although the origin is feasible");
  return v == 0;
}

std::vector<std::size_t> redundant_horn_inequalities(int n, bool stop_at_first) {
  const auto list = horn_inequalities(n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (horn_is_redundant(list, i, n)) {
      out.push_back(i);
      if (stop_at_first) break;
    }
  }
  return out;
}

}  // namespace spectral
