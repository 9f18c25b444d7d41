#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "zeroprod/error.hpp"
#include "zeroprod/factor.hpp"

using namespace zeroprod;
using factor::Factorization;
using factor::PrimePower;

TEST_CASE("is_prime examples") {
  CHECK_FALSE(factor::is_prime(std::uint64_t{0}));
  CHECK_FALSE(factor::is_prime(std::uint64_t{1}));
  CHECK(factor::is_prime(std::uint64_t{2}));
  CHECK_FALSE(factor::is_prime(std::uint64_t{561}));  // Carmichael
  CHECK(factor::is_prime(std::uint64_t{999999999989}));
  CHECK(factor::is_prime((std::uint64_t{1} << 61) - 1));
  CHECK(factor::is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
  CHECK_FALSE(factor::is_prime(std::numeric_limits<std::uint64_t>::max()));
  // strong pseudoprime to bases 2..37 would need > 3.3e24; these fool fewer bases
  CHECK_FALSE(factor::is_prime(std::uint64_t{3215031751}));
  CHECK_FALSE(factor::is_prime(std::uint64_t{3825123056546413051ULL}));
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
  for (std::uint64_t n = 0; n <= 1000000; ++n) {
    if (factor::is_prime(n) != oracle::is_prime_trial(n)) {
      FAIL("mismatch at " << n);
    }
  }
}

TEST_CASE("is_prime rejects inputs beyond 64 bits") {
  const Natural big = pow(Natural(2), 64) + Natural(13);
  CHECK_THROWS_AS((void)factor::is_prime(big), Error);
}

TEST_CASE("factorize examples") {
  CHECK(factor::factorize(std::uint64_t{12}) ==
        Factorization({PrimePower{2, 2}, PrimePower{3, 1}}));
  CHECK(factor::factorize(std::uint64_t{1}).empty());
  CHECK(factor::factorize(std::uint64_t{999999999989}) ==
        Factorization({PrimePower{999999999989, 1}}));
  try {
    (void)factor::factorize(std::uint64_t{0});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("factorize matches trial division on [1, 10^5]") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto f = factor::factorize(n);
    const auto expected = oracle::factor_trial(n);
    REQUIRE(f.size() == expected.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f.powers()[i].prime == expected[i].first);
      CHECK(f.powers()[i].exponent == expected[i].second);
    }
    CHECK(f.value() == Natural(n));
  }
}

TEST_CASE("factorize reaches rho-sized inputs") {
  const std::uint64_t cases[] = {
      999999000001ULL * 1,                 // 12-digit, checked below
      1000003ULL * 1000033ULL,             // semiprime past the trial bound
      4294967291ULL * 4294967279ULL,       // two 32-bit primes
      10007ULL * 10007ULL * 10009ULL,      // repeated large factor
      (std::uint64_t{1} << 61) - 1,
      18446744073709551615ULL,             // 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
  };
  for (std::uint64_t n : cases) {
    const auto f = factor::factorize(n);
    CHECK(f.value() == Natural(n));
    for (const auto& pp : f.powers()) CHECK(factor::is_prime(pp.prime));
  }
  CHECK(factor::factorize(std::uint64_t{1000003ULL * 1000033ULL}) ==
        Factorization({PrimePower{1000003, 1}, PrimePower{1000033, 1}}));
}

TEST_CASE("find_nontrivial_factor") {
  const std::uint64_t d15 = factor::find_nontrivial_factor(15);
  CHECK((d15 == 3 || d15 == 5));
  CHECK(factor::find_nontrivial_factor(4) == 2);
  const std::uint64_t d = factor::find_nontrivial_factor(10403);
  CHECK((d == 101 || d == 103));
  const std::uint64_t big = 4294967291ULL * 4294967279ULL;
  const std::uint64_t e = factor::find_nontrivial_factor(big);
  CHECK((e > 1 && e < big && big % e == 0));
  // deterministic across calls
  CHECK(factor::find_nontrivial_factor(big) == e);

  for (std::uint64_t bad : {0ULL, 1ULL, 2ULL, 3ULL, 7ULL, 999999999989ULL}) {
    try {
      (void)factor::find_nontrivial_factor(bad);
      FAIL("expected contract violation for " << bad);
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::ContractViolation);
    }
  }
}

TEST_CASE("factorization serialization") {
  const auto f = factor::factorize(std::uint64_t{360});
  CHECK(f.to_text() == "2^3 * 3^2 * 5");
  CHECK(f.to_json() == "[[2,3],[3,2],[5,1]]");
  CHECK(factor::factorize(std::uint64_t{1}).to_text() == "1");
  CHECK(factor::factorize(std::uint64_t{1}).to_json() == "[]");
  CHECK_THROWS_AS(Factorization({PrimePower{4, 1}}), Error);
  CHECK_THROWS_AS(Factorization({PrimePower{3, 1}, PrimePower{2, 1}}), Error);
}
