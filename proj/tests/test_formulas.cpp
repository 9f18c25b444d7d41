#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zeroprod/error.hpp"
#include "zeroprod/formulas.hpp"

using namespace zeroprod;
using namespace zeroprod::formulas;
using factor::Factorization;
using factor::PrimePower;
using ring::RingSpec;

namespace {

Rational q(std::uint64_t n, std::uint64_t d) { return Rational::make(n, d); }
Natural N(std::uint64_t v) { return Natural(v); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

Rational oracle_p_zn(std::uint64_t n) {
  const auto f = oracle::Frac::make(oracle::pillai(n), n * n);
  return q(f.num, f.den);
}

}  // namespace

TEST_CASE("p_zpk examples") {
  CHECK(p_zpk(N(2), 1) == q(3, 4));
  CHECK(p_zpk(N(2), 2) == q(1, 2));
  CHECK(p_zpk(N(5), 3) == q(17, 625));
  CHECK(kind_of([] { p_zpk(N(4), 1); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { p_zpk(N(3), 0); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { p_zpk(N(1), 2); }) == ErrorKind::InvalidInput);
  // large exponents stay exact
  const Rational big = p_zpk(N(3), 100);
  CHECK(big.den() == pow(N(3), 101));
  CHECK(big.num() == N(101 * 3 - 100));
}

TEST_CASE("p_zn_from_factorization examples") {
  CHECK(p_zn_from_factorization(Factorization({PrimePower{2, 2}, PrimePower{3, 1}})) == q(5, 18));
  CHECK(p_zn_from_factorization(Factorization({PrimePower{2, 2}, PrimePower{5, 2}})) ==
        q(13, 250));
  CHECK(p_zn_from_factorization(Factorization({PrimePower{7, 1}})) == q(13, 49));
  CHECK(kind_of([] { p_zn_from_factorization(Factorization()); }) == ErrorKind::ExcludedRing);
}

TEST_CASE("p_zn examples") {
  CHECK(p_zn(N(12)) == q(5, 18));
  CHECK(p_zn(N(2)) == q(3, 4));
  CHECK(kind_of([] { p_zn(N(1)); }) == ErrorKind::ExcludedRing);
  CHECK(kind_of([] { p_zn(N(0)); }) == ErrorKind::ExcludedRing);
}

TEST_CASE("closed form, brute force and gcd-sum agree for n <= 1000") {
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    const Rational closed = p_zn(N(n));
    REQUIRE(closed == oracle_p_zn(n));
    if (n <= 120) REQUIRE(closed == ring::prob_brute(RingSpec::zn(n)));
  }
}

TEST_CASE("prime powers: closed form and partition profile match enumeration") {
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    std::uint64_t pk = p;
    for (std::uint64_t k = 1; pk <= 4096; ++k, pk *= p) {
      CAPTURE(p);
      CAPTURE(k);
      const auto spec = RingSpec::zn(pk);
      CHECK(p_zpk(N(p), k) == oracle_p_zn(pk));
      CHECK(ann_profile_zpk(N(p), k) == ring::ann_profile(spec));
      if (pk <= 300) CHECK(p_zpk(N(p), k) == ring::prob_brute(spec));
    }
  }
}

TEST_CASE("ann_profile_zpk examples") {
  const auto p23 = ann_profile_zpk(N(2), 3);
  CHECK(p23.zero_divisors == std::map<Natural, Natural>{{N(2), N(2)}, {N(4), N(1)}});
  CHECK(ann_profile_zpk(N(13), 1).zero_divisors.empty());
  CHECK(ann_profile_zpk(N(3), 2).zero_divisors == std::map<Natural, Natural>{{N(3), N(2)}});
  CHECK(kind_of([] { ann_profile_zpk(N(6), 2); }) == ErrorKind::InvalidInput);
  // summing the partition reproduces |Ann| = (k+1)p^k - k p^(k-1)
  for (std::uint64_t k = 1; k <= 20; ++k) {
    const auto prof = ann_profile_zpk(N(7), k);
    CHECK(prof.annihilating_pairs() ==
          N(k + 1) * pow(N(7), k) - N(k) * pow(N(7), k - 1));
    CHECK(prof.element_count() == pow(N(7), k));
  }
}

TEST_CASE("coprime factors multiply (sampled pairs up to 10^6)") {
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 3000) {
    const std::uint64_t a = rng() % 1000 + 2;
    const std::uint64_t b = rng() % (1000000 / a - 1) + 2;
    if (std::gcd(a, b) != 1) continue;
    ++tested;
    REQUIRE(p_zn(N(a * b)) == p_zn(N(a)) * p_zn(N(b)));
  }
}

TEST_CASE("p_product") {
  const std::vector<Rational> two = {q(3, 4), q(5, 9)};
  CHECK(p_product(two) == q(5, 12));
  CHECK(p_product(two) == ring::prob_brute(RingSpec::parse("Zn(2)xZn(3)")));
  CHECK(p_product(two) == ring::prob_brute(RingSpec::zn(6)));
  const std::vector<Rational> one = {q(7, 27)};
  CHECK(p_product(one) == q(7, 27));
  const std::vector<Rational> halves = {q(3, 4), q(3, 4)};
  CHECK(p_product(halves) == q(9, 16));
}

TEST_CASE("lower_bound") {
  CHECK(lower_bound(N(4), N(1)) == q(1, 2));
  CHECK(lower_bound(N(8), N(3)) == q(9, 32));
  for (std::uint64_t l : {2, 3, 10, 97}) CHECK(lower_bound(N(l), N(0)) == q(2 * l - 1, l * l));
  CHECK(kind_of([] { lower_bound(N(4), N(3)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { lower_bound(N(1), N(0)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("upper_bound") {
  CHECK(upper_bound(N(4), N(1), N(2)) == q(1, 2));
  CHECK(upper_bound(N(8), N(3), N(4)) == q(3, 8));
  for (std::uint64_t l : {2, 3, 10, 97}) {
    CHECK(upper_bound(N(l), N(0), N(1)) == lower_bound(N(l), N(0)));
  }
  CHECK(kind_of([] { upper_bound(N(7), N(0), N(2)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { upper_bound(N(8), N(3), N(5)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { upper_bound(N(8), N(3), N(0)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { upper_bound(N(8), N(7), N(2)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("p_integral_domain") {
  CHECK(p_integral_domain(N(2)) == q(3, 4));
  CHECK(p_integral_domain(N(3)) == q(5, 9));
  CHECK(p_integral_domain(N(97)) == q(193, 9409));
  CHECK(p_integral_domain(N(97)) == oracle_p_zn(97));
}

TEST_CASE("p_uniform_ann") {
  CHECK(p_uniform_ann(N(9), N(2), N(3)) == q(7, 27));
  CHECK(p_uniform_ann(N(9), N(2), N(3)) == p_zpk(N(3), 2));
  CHECK(p_uniform_ann(N(4), N(1), N(2)) == q(1, 2));
  CHECK(p_uniform_ann(N(4), N(1), N(2)) == ring::prob_brute(RingSpec::zn(4)));
  CHECK(p_uniform_ann(N(11), N(0), N(1)) == q(21, 121));
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    CHECK(p_uniform_ann(N(p * p), N(p - 1), N(p)) == p_zpk(N(p), 2));
  }
}

TEST_CASE("refined_cap") {
  CHECK(refined_cap(N(2)) == q(3, 4));
  CHECK(refined_cap(N(4)) == q(9, 16));
  CHECK(refined_cap(N(10)) == q(51, 100));
  for (std::uint64_t l = 3; l < 200; ++l) CHECK(refined_cap(N(l)) < refined_cap(N(l - 1)));
  CHECK(global_cap() == q(3, 4));
}

TEST_CASE("p_zpk is strictly decreasing in k and in p") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= 50; ++p) {
    if (oracle::is_prime_trial(p)) primes.push_back(p);
  }
  for (std::uint64_t p : primes) {
    for (std::uint64_t k = 2; k <= 12; ++k) CHECK(p_zpk(N(p), k) < p_zpk(N(p), k - 1));
  }
  for (std::size_t i = 1; i < primes.size(); ++i) {
    for (std::uint64_t k = 1; k <= 12; ++k) {
      CHECK(p_zpk(N(primes[i]), k) < p_zpk(N(primes[i - 1]), k));
    }
  }
}

TEST_CASE("closed forms for |Z(Z_n)| and the largest annihilator") {
  for (std::uint64_t n = 2; n <= 600; ++n) {
    const auto f = factor::factorize(n);
    const auto spec = RingSpec::zn(n);
    CHECK(zero_divisor_count_zn(f) == Natural(ring::zero_divisor_set(spec).size()));
    CHECK(max_ann_size_zn(f) == ring::max_ann_size(spec));
  }
}

TEST_CASE("bounds_report examples") {
  const auto r4 = bounds_report(RingSpec::zn(4));
  CHECK(r4.lower == q(1, 2));
  CHECK(r4.exact == q(1, 2));
  CHECK(r4.upper == q(1, 2));
  CHECK(r4.all_hold);

  const auto r7 = bounds_report(RingSpec::zn(7));
  CHECK(r7.lower == q(13, 49));
  CHECK(r7.exact == q(13, 49));
  CHECK(r7.upper == q(13, 49));
  CHECK_FALSE(r7.maxann.has_value());
  CHECK(r7.all_hold);

  const auto r8 = bounds_report(RingSpec::zn(8));
  CHECK(r8.lower == q(9, 32));
  CHECK(r8.exact == q(5, 16));
  CHECK(r8.upper == q(3, 8));
  CHECK(r8.zcount == N(3));
  CHECK(r8.maxann == N(4));
  CHECK(r8.refined_cap == q(33, 64));
  CHECK(r8.global_cap == q(3, 4));
  CHECK(r8.all_hold);

  ring::Limits small;
  small.single_cap = 16;
  CHECK(kind_of([&] { bounds_report(RingSpec::zn(17), small); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("all_hold reports a violated chain") {
  const auto bad = make_bounds_report(N(8), N(3), N(4), q(1, 2));
  CHECK_FALSE(bad.all_hold);
  const auto low = make_bounds_report(N(8), N(3), N(4), q(1, 64));
  CHECK_FALSE(low.all_hold);
}

TEST_CASE("bound chain over rings up to the cap") {
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    const auto r = bounds_report(RingSpec::zn(n));
    REQUIRE(r.all_hold);
    REQUIRE(r.upper <= r.refined_cap);
    REQUIRE(r.refined_cap <= q(3, 4));
    if (n > 2) REQUIRE(r.refined_cap < q(3, 4));
    REQUIRE((r.exact == q(3, 4)) == (n == 2));
  }
  for (std::uint64_t a = 2; a <= 30; ++a) {
    for (std::uint64_t b = 2; b <= 30; ++b) {
      REQUIRE(bounds_report(RingSpec::product({RingSpec::zn(a), RingSpec::zn(b)})).all_hold);
    }
  }
}
