#include <doctest.h>

#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "spectral/pullback.hpp"

using namespace spectral;

namespace {

CohomologyClass make_class(const GrassContext& g, std::initializer_list<std::pair<Partition, int>> terms) {
  CohomologyClass x(g);
  for (const auto& [a, c] : terms) x.add(a, c);
  return x;
}

// Character route with the brute-force characters, cached per (lambda, mu).
Rational character_route(const Partition& pi, const Partition& nu, int d_B) {
  static std::map<std::pair<Partition, Partition>, std::int64_t> chi;
  auto get = [](const Partition& a, const Partition& b) {
    auto it = chi.find({a, b});
    if (it == chi.end()) it = chi.emplace(std::make_pair(a, b), oracle::character(a, b)).first;
    return it->second;
  };
  Rational sum = 0;
  for (const auto& mu : partitions_of(pi.weight())) {
    Rational term(get(pi, mu) * get(nu, mu), zmu(mu));
    for (int i = 0; i < mu.length(); ++i) term *= d_B;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("small pullback identities") {
  const PhiContext p2(3, 2, 1), p3(3, 3, 1);
  const auto g = p2.target();
  CHECK(phi_star_schur({1}, p2) == make_class(g, {{{1}, 2}}));
  CHECK(phi_star_schur({2}, p2) == make_class(g, {{{2}, 3}}));
  CHECK(phi_star_schur({1}, p3) == make_class(g, {{{1}, 3}}));
  CHECK(phi_star_schur({2}, p3) == make_class(g, {{{2}, 6}}));
  CHECK(phi_star_schur({1, 1}, p3) == make_class(g, {{{2}, 3}}));

  auto pre = [](const Partition& pi, int d_B, std::initializer_list<std::pair<Partition, int>> terms) {
    SymExpansion x(Basis::schur);
    for (const auto& [a, c] : terms) x.add(a, c);
    CHECK(phi_star_expansion(pi, d_B) == x);
  };
  pre({1}, 2, {{{1}, 2}});
  pre({2}, 2, {{{2}, 3}, {{1, 1}, 1}});
  pre({1, 1}, 2, {{{1, 1}, 3}, {{2}, 1}});
  pre({1}, 3, {{{1}, 3}});
  pre({2}, 3, {{{2}, 6}, {{1, 1}, 3}});
  pre({1, 1}, 3, {{{1, 1}, 6}, {{2}, 3}});
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(PhiContext(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(PhiContext(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi_star_schur({5}, PhiContext(3, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(phi_multiplicity({2}, {1}, 2), std::invalid_argument);
  const PhiContext pc(3, 2, 1);
  CHECK(pc.source() == GrassContext(2, 6));
  CHECK(pc.target() == GrassContext(1, 3));
}

TEST_CASE("multiplicity examples") {
  CHECK(phi_multiplicity({2}, {1, 1}, 2) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(phi_multiplicity({1}, {1}, d) == d);
  CHECK(phi_multiplicity({2}, {2}, 3) == 6);
}

TEST_CASE("route agreement") {
  for (int n = 0; n <= 6; ++n) {
    for (int d_B = 1; d_B <= 4; ++d_B) {
      for (const auto& pi : partitions_of(n)) {
        const auto x = phi_star_expansion(pi, d_B);
        for (const auto& nu : partitions_of(n)) {
          const Rational c = x.coefficient(nu);
          CHECK(c == character_route(pi, nu, d_B));
          CHECK(c == Rational(phi_multiplicity(pi, nu, d_B)));
          CHECK(is_integral(c));
          CHECK(c >= 0);
        }
        for (const auto& [nu, c] : x.terms()) CHECK(nu.weight() == n);
        if (d_B == 1) CHECK(x == SymExpansion::single(Basis::schur, pi));
      }
    }
  }
}

TEST_CASE("total dimension") {
  auto dim = [](const Partition& a) {
    return character(a, Partition(std::vector<int>(static_cast<std::size_t>(a.weight()), 1)));
  };
  for (int n = 1; n <= 5; ++n) {
    for (int d_B = 1; d_B <= 4; ++d_B) {
      for (const auto& pi : partitions_of(n)) {
        Integer total = 0;
        const auto x = phi_star_expansion(pi, d_B);
        for (const auto& [nu, c] : x.terms()) total += to_integer(c) * dim(nu);
        CHECK(total == Integer(dim(pi)) * ipow(Integer(d_B), static_cast<unsigned>(n)));
      }
    }
  }
}

TEST_CASE("truncation keeps the target rectangle") {
  for (int d_A = 2; d_A <= 4; ++d_A) {
    for (int d_B = 1; d_B <= 3; ++d_B) {
      for (int k = 1; k < d_A; ++k) {
        const PhiContext pc(d_A, d_B, k);
        const auto src = pc.source();
        for (int w = 0; w <= std::min(src.dimension(), 6); ++w) {
          for (const auto& pi : enumerate_in_rectangle(Rectangle(src.rows(), src.cols()), w)) {
            const auto cls = phi_star_schur(pi, pc);
            const auto full = phi_star_expansion(pi, d_B);
            for (const auto& [nu, c] : full.terms()) {
              CHECK(cls.coefficient(nu) == (pc.target().admits(nu) ? to_integer(c) : Integer(0)));
            }
          }
        }
      }
    }
  }
}
