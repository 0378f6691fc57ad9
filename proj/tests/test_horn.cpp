#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "oracles.hpp"
#include "spectral/horn.hpp"
#include "spectral/numeric.hpp"

using namespace spectral;

namespace {

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  }
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("small T sets") {
  CHECK(horn_sets(1, 2) == std::vector<HornTriple>{{1, {1}, {1}, {1}}, {1, {1}, {2}, {2}}, {1, {2}, {1}, {2}}});
  CHECK(horn_sets(2, 2) == std::vector<HornTriple>{{2, {1, 2}, {1, 2}, {1, 2}}});
  const auto& t13 = horn_sets(1, 3);
  CHECK(std::find(t13.begin(), t13.end(), HornTriple{1, {2}, {2}, {3}}) != t13.end());
  CHECK_THROWS_AS(horn_sets(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(horn_sets(0, 2), std::invalid_argument);
}

TEST_CASE("inequality lists") {
  std::vector<std::string> n2;
  for (const auto& t : horn_inequalities(2)) n2.push_back(to_string(t));
  CHECK(n2 == std::vector<std::string>{"g1 <= a1+b1", "g2 <= a1+b2", "g2 <= a2+b1"});
  std::set<std::string> n3;
  for (const auto& t : horn_inequalities(3)) n3.insert(to_string(t));
  CHECK(n3.count("g3 <= a2+b2") == 1);
  CHECK(horn_inequalities(1).empty());
  // Frozen counts.
  CHECK(horn_inequalities(2).size() == 3);
  CHECK(horn_inequalities(3).size() == 12);
  CHECK(horn_inequalities(4).size() == 41);
  CHECK(horn_inequalities(5).size() == 142);
}

TEST_CASE("balance and subset of U") {
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto& T = horn_sets(r, n);
      const auto U = horn_candidates(r, n);
      for (const auto& t : T) {
        CHECK(horn_balanced(t));
        CHECK(std::binary_search(U.begin(), U.end(), t));
        CHECK(static_cast<int>(t.I.size()) == r);
      }
      for (const auto& u : U) CHECK(horn_balanced(u));
    }
  }
}

TEST_CASE("recursion against unmemoized oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= n; ++r) CHECK(horn_sets(r, n) == oracle::horn_sets(r, n));
  }
}

TEST_CASE("memo is safe under concurrent callers") {
  std::vector<std::thread> pool;
  std::vector<std::size_t> sizes(4);
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&sizes, i] { sizes[static_cast<std::size_t>(i)] = horn_inequalities(5).size(); });
  }
  for (auto& t : pool) t.join();
  for (auto s : sizes) CHECK(s == 142);
}

TEST_CASE("check_horn examples") {
  CHECK(check_horn(Spectrum({0, 0}), Spectrum({0, 0}), Spectrum({0, 0}), 1e-9).ok());
  const Spectrum a({1, 0}), b({1, 0});
  CHECK(check_horn(a, b, Spectrum({2, 0}), 1e-9).ok());
  CHECK(check_horn(a, b, Spectrum({1.5, 0.5}), 1e-9).ok());
  const auto bad = check_horn(a, b, Spectrum({2.5, -0.5}), 1e-9);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].constraint == "g1 <= a1+b1");
  CHECK(bad.violations[0].slack == doctest::Approx(-0.5));
  const auto trace = check_horn(a, b, Spectrum({1, 0}), 1e-9);
  CHECK_FALSE(trace.ok());
  CHECK(trace.trace_gap == doctest::Approx(-1.0));
  CHECK_THROWS_AS(check_horn(a, b, Spectrum({1, 0, 0}), 1e-9), std::invalid_argument);
}

TEST_CASE("random Hermitian sums satisfy Horn") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 4; ++n) {
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto X = random_hermitian(n, rng), Y = random_hermitian(n, rng);
      const auto report = check_horn(hermitian_eigenvalues(X), hermitian_eigenvalues(Y),
                                     hermitian_eigenvalues(X + Y), 1e-9);
      violations += static_cast<int>(report.violations.size());
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("form and redundancy") {
  const auto f = horn_form({1, {2}, {1}, {3}}, 3);
  REQUIRE(f.size() == 9);
  CHECK(f(1) == -1);
  CHECK(f(3) == -1);
  CHECK(f(8) == 1);
  CHECK(f(0) == 0);
  for (int n = 2; n <= 5; ++n) CHECK(redundant_horn_inequalities(n).empty());
  // An inequality duplicated in the list is implied by its twin.
  auto list = horn_inequalities(3);
  list.push_back(list.front());
  CHECK(horn_is_redundant(list, list.size() - 1, 3));
}
