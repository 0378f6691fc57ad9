#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "spectral/symmetric_functions.hpp"

using namespace spectral;

namespace {

SymExpansion s(const Partition& a, const Rational& c = 1) { return SymExpansion::single(Basis::schur, a, c); }

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Product of h_k over the parts, built from repeated Pieri steps.
SymExpansion h_product(const Partition& beta) {
  SymExpansion x = s({});
  for (int part : beta.parts()) x = pieri_multiply(x, PieriKind::complete, part);
  return x;
}

SymExpansion random_expansion(Basis basis, int n, std::mt19937_64& rng) {
  SymExpansion x(basis);
  std::uniform_int_distribution<int> coin(0, 2), num(-5, 5), den(1, 4);
  for (const auto& a : partitions_of(n)) {
    if (coin(rng) == 0) x.add(a, Rational(num(rng), den(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("zmu") {
  CHECK(zmu({1, 1, 1}) == 6);
  CHECK(zmu({3}) == 3);
  CHECK(zmu({2, 1}) == 2);
  CHECK(zmu({}) == 1);
  // n! / z(mu) sums to n! over the classes.
  for (int n = 1; n <= 7; ++n) {
    Rational total = 0;
    for (const auto& mu : partitions_of(n)) total += Rational(factorial(n), zmu(mu));
    CHECK(total == factorial(n));
  }
}

TEST_CASE("characters") {
  CHECK(character({3}, {2, 1}) == 1);
  CHECK(character({1, 1}, {2}) == -1);
  CHECK(character({2, 1}, {1, 1, 1}) == 2);
  CHECK_THROWS_AS(character({2}, {1}), std::invalid_argument);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        CHECK(character(lambda, mu) == oracle::character(lambda, mu));
      }
    }
  }
  CHECK(character_table(4).size() == 25);
}

TEST_CASE("character orthogonality and dimension sum") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        Rational sum = 0;
        for (const auto& mu : parts) sum += Rational(character(a, mu) * character(b, mu), zmu(mu));
        CHECK(sum == (a == b ? 1 : 0));
      }
    }
    std::int64_t squares = 0;
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& a : parts) squares += character(a, ones) * character(a, ones);
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("jacobi-trudi") {
  CHECK(jacobi_trudi({1}) == SymExpansion::single(Basis::complete, {1}));
  SymExpansion e11(Basis::complete);
  e11.add({1, 1}, 1);
  e11.add({2}, -1);
  CHECK(jacobi_trudi({1, 1}) == e11);
  SymExpansion e21(Basis::complete);
  e21.add({2, 1}, 1);
  e21.add({3}, -1);
  CHECK(jacobi_trudi({2, 1}) == e21);
  // Expanding the h products through Pieri gives back s_alpha.
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) {
      SymExpansion back(Basis::schur);
      const auto jt = jacobi_trudi(a);
      for (const auto& [beta, c] : jt.terms()) back += c * h_product(beta);
      CHECK(back == s(a));
    }
  }
}

TEST_CASE("pieri") {
  CHECK(pieri_multiply(s({1}), PieriKind::complete, 1) == s({2}) + s({1, 1}));
  CHECK(pieri_multiply(s({}), PieriKind::complete, 4) == s({4}));
  CHECK(pieri_multiply(s({1}), PieriKind::elementary, 2) == s({2, 1}) + s({1, 1, 1}));
  CHECK(pieri_multiply(s({2, 1}), PieriKind::elementary, 0) == s({2, 1}));
  // Pieri coefficients against LR counts with a one-row / one-column factor.
  for (int n = 0; n <= 4; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (int k = 1; k <= 3; ++k) {
        const auto h = pieri_multiply(s(a), PieriKind::complete, k);
        const auto e = pieri_multiply(s(a), PieriKind::elementary, k);
        for (const auto& nu : partitions_of(n + k)) {
          CHECK(h.coefficient(nu) == oracle::lr_coefficient(a, {k}, nu));
          CHECK(e.coefficient(nu) == oracle::lr_coefficient(a, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), nu));
        }
      }
    }
  }
}

TEST_CASE("omega") {
  CHECK(omega(SymExpansion::single(Basis::elementary, {2, 1})) == SymExpansion::single(Basis::complete, {2, 1}));
  CHECK(omega(s({2})) == s({1, 1}));
  CHECK_THROWS_AS(omega(SymExpansion::single(Basis::monomial, {1})), std::invalid_argument);
  // omega(s_a) via the h route: omega(h_beta) = e_beta, then convert back.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : partitions_of(n)) {
      const auto via_e = convert(omega(jacobi_trudi(a)), Basis::schur);
      CHECK(via_e == s(conjugate(a)));
    }
  }
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) CHECK(omega(omega(s(a))) == s(a));
    for (Basis b : {Basis::elementary, Basis::complete, Basis::power, Basis::schur}) {
      const auto x = random_expansion(b, n, rng);
      CHECK(omega(omega(x)) == x);
    }
  }
  // Sign on power sums.
  CHECK(omega(SymExpansion::single(Basis::power, {2, 1})) == SymExpansion::single(Basis::power, {2, 1}, -1));
}

TEST_CASE("schur <-> power") {
  SymExpansion p2(Basis::power);
  p2.add({1, 1}, Rational(1, 2));
  p2.add({2}, Rational(1, 2));
  CHECK(schur_to_power({2}) == p2);
  SymExpansion p11(Basis::power);
  p11.add({1, 1}, Rational(1, 2));
  p11.add({2}, Rational(-1, 2));
  CHECK(schur_to_power({1, 1}) == p11);
  CHECK(schur_to_power({1}) == SymExpansion::single(Basis::power, {1}));
  CHECK(power_to_schur({1}) == s({1}));
  CHECK(power_to_schur({2}) == s({2}) - s({1, 1}));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : partitions_of(n)) {
      const auto p = schur_to_power(a);
      SymExpansion back(Basis::schur);
      for (const auto& [mu, c] : p.terms()) {
        CHECK(zmu(mu) % static_cast<std::int64_t>(denominator_of(c)) == 0);
        back += c * power_to_schur(mu);
      }
      CHECK(back == s(a));
      for (const auto& mu : partitions_of(n)) {
        // The p coefficient is chi / z: independent of the MN recursion.
        CHECK(p.coefficient(mu) == Rational(oracle::character(a, mu), zmu(mu)));
      }
    }
    for (const auto& mu : partitions_of(n)) {
      const auto x = power_to_schur(mu);
      for (const auto& [lambda, c] : x.terms()) CHECK(is_integral(c));
    }
  }
}

TEST_CASE("convert and multiply") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (Basis b : {Basis::elementary, Basis::complete, Basis::power}) {
        CHECK(convert(convert(s(a), b), Basis::schur) == s(a));
      }
    }
  }
  // m basis: s_(1,1) = m_(1,1); s_(2) = m_(2) + m_(1,1).
  SymExpansion m2(Basis::monomial);
  m2.add({2}, 1);
  m2.add({1, 1}, 1);
  CHECK(convert(s({2}), Basis::monomial) == m2);
  CHECK_THROWS_AS(convert(SymExpansion::single(Basis::monomial, {1}), Basis::schur), std::invalid_argument);
  for (int n1 = 0; n1 <= 3; ++n1) {
    for (int n2 = 0; n2 <= 3; ++n2) {
      for (const auto& a : partitions_of(n1)) {
        for (const auto& b : partitions_of(n2)) {
          const auto prod = multiply(s(a), s(b));
          for (const auto& nu : partitions_of(n1 + n2)) {
            CHECK(prod.coefficient(nu) == oracle::lr_coefficient(a, b, nu));
          }
        }
      }
    }
  }
  // Power sums multiply by concatenating parts.
  CHECK(multiply(SymExpansion::single(Basis::power, {2}), SymExpansion::single(Basis::power, {3, 1})) ==
        SymExpansion::single(Basis::power, {3, 2, 1}));
}

TEST_CASE("expansion text") {
  CHECK(to_string(s({2}) + Rational(3) * s({1, 1})) == "s[2] + 3 s[1,1]");
  CHECK(to_string(schur_to_power({1, 1})) == "-1/2 p[2] + 1/2 p[1,1]");
  CHECK(to_string(SymExpansion(Basis::schur)) == "0");
}
