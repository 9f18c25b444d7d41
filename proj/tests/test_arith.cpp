#include <doctest.h>

#include <random>

#include "zeroprod/error.hpp"
#include "zeroprod/natural.hpp"
#include "zeroprod/rational.hpp"

using zeroprod::Error;
using zeroprod::ErrorKind;
using zeroprod::Natural;
using zeroprod::Rational;

namespace {

Rational q(std::uint64_t n, std::uint64_t d) { return Rational::make(n, d); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd(Natural(0), Natural(7)) == Natural(7));
  CHECK(gcd(Natural(12), Natural(18)) == Natural(6));
  CHECK(gcd(Natural(1), Natural(123456789)) == Natural(1));
  CHECK(gcd(Natural(0), Natural(0)) == Natural(0));
}

TEST_CASE("gcd is the greatest common divisor") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() % 100000, b = rng() % 100000 + 1;
    const Natural g = gcd(Natural(a), Natural(b));
    REQUIRE_FALSE(g.is_zero());
    CHECK((Natural(a) % g).is_zero());
    CHECK((Natural(b) % g).is_zero());
    // any common divisor divides g
    for (std::uint64_t d = 1; d <= 50; ++d) {
      if (a % d == 0 && b % d == 0) CHECK((g % Natural(d)).is_zero());
    }
  }
}

TEST_CASE("naturals beyond 128 bits") {
  const Natural l = pow(Natural(2), 64) - Natural(1);
  const Natural sq = l * l;
  CHECK(sq.bit_length() == 128);
  const Natural cube = sq * l;
  CHECK(cube.bit_length() == 192);
  CHECK(cube / l / l == l);
  CHECK(Natural::parse(cube.to_string()) == cube);
  CHECK_FALSE(sq.fits_u64());
  CHECK(kind_of([&] { (void)sq.to_u64_checked(); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { (void)(Natural(3) - Natural(4)); }) == ErrorKind::ContractViolation);
  CHECK(kind_of([] { (void)Natural::parse("12a"); }) == ErrorKind::Parse);
  CHECK(isqrt(Natural(99)) == Natural(9));
}

TEST_CASE("rat_make reduces") {
  CHECK(q(8, 16) == q(1, 2));
  CHECK(q(8, 16).to_string() == "1/2");
  CHECK(q(0, 5).to_string() == "0/1");
  CHECK(q(40, 144).to_string() == "5/18");
  CHECK(kind_of([] { (void)q(1, 0); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("rat_make is invariant under scaling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = rng() % 10000, b = rng() % 10000 + 1, c = rng() % 1000 + 1;
    CHECK(q(a * c, b * c) == q(a, b));
  }
}

TEST_CASE("rat_mul") {
  CHECK(q(1, 2) * q(13, 125) == q(13, 250));
  CHECK(q(7, 9) * q(1, 1) == q(7, 9));
  CHECK(q(3, 4) * q(0, 1) == q(0, 1));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Rational a = q(rng() % 50, rng() % 50 + 1);
    const Rational b = q(rng() % 50, rng() % 50 + 1);
    const Rational c = q(rng() % 50, rng() % 50 + 1);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rat_cmp") {
  CHECK(q(1, 2) < q(3, 4));
  CHECK((q(5, 18) <=> q(5, 18)) == std::strong_ordering::equal);
  CHECK(q(13, 250) > q(1, 20));
}

TEST_CASE("addition and distance") {
  CHECK(q(1, 2) + q(1, 100) == q(51, 100));
  CHECK(abs_diff(q(1, 4), q(3, 4)) == q(1, 2));
  CHECK(abs_diff(q(3, 4), q(1, 4)) == q(1, 2));
}

TEST_CASE("decimal rendering") {
  CHECK(q(5, 18).to_decimal(6) == "0.277778");
  CHECK(q(1, 2).to_decimal(3) == "0.500");
  CHECK(q(3, 4).to_decimal(0) == "1");
  CHECK(q(1, 8).to_decimal(2) == "0.13");  // half rounds up
  CHECK(q(13, 250).to_decimal(6) == "0.052000");
  CHECK(Rational::integer(2).to_decimal(1) == "2.0");
  CHECK(Rational::parse("10/4") == q(5, 2));
  CHECK(q(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
