#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "s3s4/modcore.hpp"

using namespace s3s4;

namespace {

Residue res(long long value, long long modulus) {
  return Residue::reduce(Int(value), Int(modulus));
}

}  // namespace

TEST_CASE("unit_group enumerates coprime residues") {
  std::vector<Int> got;
  for (const Residue& r : unit_group(10)) got.push_back(r.value());
  CHECK(got == std::vector<Int>{1, 3, 7, 9});

  auto trivial = unit_group(1);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].value() == 0);
  CHECK(trivial[0].modulus() == 1);

  CHECK(unit_group(7).size() == 6);
  CHECK_THROWS_AS(unit_group(0), std::invalid_argument);
}

TEST_CASE("jacobi examples") {
  CHECK(jacobi(3, 7) == -1);   // squares mod 7 are {1,2,4}
  CHECK(jacobi(4, 7) == 1);
  CHECK(jacobi(-1, 7) == -1);  // 7 = 3 (mod 4)
  CHECK(jacobi(0, 7) == 0);
  CHECK(jacobi(5, 1) == 1);
  CHECK_THROWS_AS(jacobi(3, 10), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi equals the product of brute-force Legendre symbols") {
  // one exhaustive square table per odd prime, built from scratch
  std::map<oracle::u64, std::vector<char>> square_tables;
  auto legendre = [&](oracle::u64 a, oracle::u64 p) -> int {
    auto [it, inserted] = square_tables.try_emplace(p);
    if (inserted) it->second = oracle::unit_square_table(p);
    a %= p;
    if (a == 0) return 0;
    return it->second[a] ? 1 : -1;
  };
  for (oracle::u64 n = 1; n <= 5000; n += 2) {
    Factorization fac = factor(n);
    for (oracle::u64 a = 0; a < n; ++a) {
      int expected = 1;
      for (const auto& pp : fac.entries) {
        int leg = legendre(a, pp.prime.convert_to<oracle::u64>());
        if (leg == 0) {
          expected = 0;
          break;
        }
        if (pp.exponent % 2 == 1) expected *= leg;
      }
      REQUIRE(jacobi(a, n) == expected);
    }
  }
}

TEST_CASE("sqrt_mod examples") {
  CHECK(sqrt_mod(res(4, 7))->value() == 2);
  CHECK(sqrt_mod(res(2, 7))->value() == 3);  // 3^2 = 9 = 2 (mod 7)
  CHECK(!sqrt_mod(res(3, 7)).has_value());
  CHECK(!sqrt_mod(res(7, 8)).has_value());
  CHECK(sqrt_mod(res(0, 1))->value() == 0);
  CHECK_THROWS_AS(sqrt_mod(res(4, 10)), std::invalid_argument);  // non-unit
}

TEST_CASE("sqrt_mod returns the smallest root") {
  CHECK(sqrt_mod(res(0, 1))->value() == 0);
  for (oracle::u64 n = 2; n <= 200; ++n) {
    for (oracle::u64 a = 1; a < n; ++a) {
      if (oracle::gcd_u64(a, n) != 1) continue;
      oracle::u64 smallest = n;  // sentinel: no root
      for (oracle::u64 r = 0; r < n; ++r)
        if ((r * r) % n == a) {
          smallest = r;
          break;
        }
      auto got = sqrt_mod(Residue(Int(a), Int(n)));
      if (smallest == n) {
        REQUIRE(!got.has_value());
      } else {
        REQUIRE(got.has_value());
        REQUIRE(got->value() == smallest);
      }
    }
  }
}

TEST_CASE("sqrt_mod agrees with exhaustive search over the unit group") {
  for (oracle::u64 n = 1; n <= 5000; ++n) {
    std::vector<char> squares = oracle::unit_square_table(n);
    if (n == 1) {
      CHECK(sqrt_mod(res(0, 1)).has_value());
      continue;
    }
    for (oracle::u64 a = 1; a < n; ++a) {
      if (oracle::gcd_u64(a, n) != 1) continue;
      auto got = sqrt_mod(Residue(Int(a), Int(n)));
      REQUIRE(got.has_value() == static_cast<bool>(squares[a]));
      if (got) REQUIRE((got->value() * got->value()) % n == a);
    }
  }
}

TEST_CASE("crt examples") {
  Residue combined = crt({res(2, 5), res(3, 7)});
  CHECK(combined.value() == 17);
  CHECK(combined.modulus() == 35);

  CHECK(crt({res(0, 3), res(0, 4)}).value() == 0);
  CHECK(crt({res(1, 2), res(1, 3)}).value() == 1);
  CHECK(crt({}).modulus() == 1);
  CHECK_THROWS_AS(crt({res(1, 6), res(1, 4)}), std::invalid_argument);
}

TEST_CASE("crt reproduces every input residue (randomized)") {
  std::mt19937_64 rng(20240617);
  std::uniform_int_distribution<oracle::u64> pick_mod(2, 1000);
  int done = 0;
  while (done < 10000) {
    oracle::u64 m1 = pick_mod(rng);
    oracle::u64 m2 = pick_mod(rng);
    if (m1 * m2 > 1000000 || oracle::gcd_u64(m1, m2) != 1) continue;
    oracle::u64 a1 = rng() % m1;
    oracle::u64 a2 = rng() % m2;
    Residue combined = crt({res(a1, m1), res(a2, m2)});
    REQUIRE(combined.modulus() == m1 * m2);
    REQUIRE(combined.value() % m1 == a1);
    REQUIRE(combined.value() % m2 == a2);
    ++done;
  }
}

TEST_CASE("factor examples") {
  Factorization f360 = factor(360);
  REQUIRE(f360.entries.size() == 3);
  CHECK(f360.entries[0] == PrimePower{2, 3});
  CHECK(f360.entries[1] == PrimePower{3, 2});
  CHECK(f360.entries[2] == PrimePower{5, 1});

  CHECK(factor(49).entries == std::vector<PrimePower>{{7, 2}});
  CHECK(factor(1).entries.empty());
  CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor reconstructs every n up to 1e6") {
  for (long long n = 1; n <= 1000000; ++n) {
    Factorization fac = factor(n);
    REQUIRE(fac.reconstruct() == n);
    Int last = 1;
    for (const auto& pp : fac.entries) {
      REQUIRE(pp.prime > last);  // strictly increasing
      last = pp.prime;
    }
  }
}

TEST_CASE("factor certifies primes (spot checks against a sieve)") {
  auto primes = oracle::primes_up_to(2000);
  for (oracle::u64 p : primes) {
    Factorization fac = factor(p);
    REQUIRE(fac.entries.size() == 1);
    REQUIRE(fac.entries[0].prime == p);
    REQUIRE(fac.entries[0].exponent == 1);
  }
}

TEST_CASE("euler_phi matches unit_group size") {
  for (long long n = 1; n <= 300; ++n)
    CHECK(euler_phi(n) == Int(unit_group(n).size()));
}

TEST_CASE("pow_mod and mod_inverse basics") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK(pow_mod(3, 100, 1) == 0);
  CHECK(*mod_inverse(3, 10) == 7);
  CHECK(!mod_inverse(4, 10).has_value());
  CHECK(*mod_inverse(12, 1) == 0);
}

TEST_CASE("Residue invariants") {
  CHECK_THROWS_AS(Residue(Int(5), Int(5)), std::invalid_argument);
  CHECK_THROWS_AS(Residue(Int(-1), Int(5)), std::invalid_argument);
  CHECK_THROWS_AS(Residue(Int(0), Int(0)), std::invalid_argument);
  CHECK(Residue::reduce(-3, 10).value() == 7);
  CHECK(Residue::reduce(23, 10).value() == 3);
  CHECK(res(3, 10).inverse().value() == 7);
  CHECK((res(7, 10) * res(3, 10)).value() == 1);
  CHECK((-res(3, 10)).value() == 7);
}
