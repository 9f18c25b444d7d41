#include "zeroprod/formulas.hpp"

#include "zeroprod/error.hpp"

namespace zeroprod::formulas {
namespace {

// Keeps p^(k+1) to a size that fits comfortably in memory.
constexpr std::size_t kMaxPowerBits = 1 << 20;

void check_prime_power(const Natural& p, std::uint64_t k) {
  if (!p.fits_u64() || !factor::is_prime(p)) {
    fail(ErrorKind::InvalidInput, p.to_string() + " is not a prime in the supported range");
  }
  if (k == 0) fail(ErrorKind::InvalidInput, "prime-power exponent must be >= 1");
  if (k >= kMaxPowerBits || p.bit_length() * (k + 1) > kMaxPowerBits) {
    fail(ErrorKind::OutOfRange, "prime power " + p.to_string() + "^" + std::to_string(k) +
                                    " is too large");
  }
}

void check_order(const Natural& l) {
  if (l < Natural(2)) fail(ErrorKind::InvalidInput, "ring order must be >= 2");
}

void check_bound_args(const Natural& l, const Natural& zcount) {
  check_order(l);
  if (zcount + Natural(2) > l) {
    fail(ErrorKind::InvalidInput, "zero-divisor count " + zcount.to_string() +
                                      " exceeds l - 2 for l = " + l.to_string());
  }
}

}  // namespace

Rational p_zpk(const Natural& p, std::uint64_t k) {
  check_prime_power(p, k);
  const Natural kk(k);
  return Rational::make((kk + Natural(1)) * p - kk, pow(p, k + 1));
}

Rational p_zn_from_factorization(const factor::Factorization& f) {
  if (f.empty()) fail(ErrorKind::ExcludedRing, "Z_1 is the zero ring, which is excluded");
  Rational result = Rational::integer(1);
  for (const auto& pp : f.powers()) result = result * p_zpk(Natural(pp.prime), pp.exponent);
  return result;
}

Rational p_zn(const Natural& n) {
  if (n <= Natural(1)) {
    fail(ErrorKind::ExcludedRing, "Z_" + n.to_string() +
                                      " is excluded: rings must be finite with identity 1 != 0");
  }
  return p_zn_from_factorization(factor::factorize(n));
}

Rational p_product(std::span<const Rational> ps) {
  Rational result = Rational::integer(1);
  for (const auto& p : ps) result = result * p;
  return result;
}

Rational lower_bound(const Natural& l, const Natural& zcount) {
  check_bound_args(l, zcount);
  return Rational::make(Natural(2) * l + zcount - Natural(1), l * l);
}

Rational upper_bound(const Natural& l, const Natural& zcount, const Natural& m) {
  check_bound_args(l, zcount);
  if (zcount.is_zero()) {
    if (m != Natural(1)) fail(ErrorKind::InvalidInput, "m must be 1 when there are no zero-divisors");
  } else if (m < Natural(1) || Natural(2) * m > l) {
    fail(ErrorKind::InvalidInput, "m = " + m.to_string() + " outside [1, l/2] for l = " + l.to_string());
  }
  return Rational::make(Natural(2) * l + (m - Natural(1)) * zcount - Natural(1), l * l);
}

Rational p_integral_domain(const Natural& l) {
  check_order(l);
  return Rational::make(Natural(2) * l - Natural(1), l * l);
}

Rational p_uniform_ann(const Natural& l, const Natural& zcount, const Natural& m) {
  return upper_bound(l, zcount, m);
}

Rational refined_cap(const Natural& l) {
  check_order(l);
  return Rational::make(1, 2) + Rational::make(1, l * l);
}

Rational global_cap() { return Rational::make(3, 4); }

ring::AnnProfile ann_profile_zpk(const Natural& p, std::uint64_t k) {
  check_prime_power(p, k);
  ring::AnnProfile profile;
  profile.zero[pow(p, k)] = Natural(1);
  for (std::uint64_t i = 1; i < k; ++i) {
    profile.zero_divisors[pow(p, i)] = pow(p, k - i) - pow(p, k - i - 1);
  }
  profile.rest[Natural(1)] = pow(p, k) - pow(p, k - 1);
  return profile;
}

Natural zero_divisor_count_zn(const factor::Factorization& f) {
  if (f.empty()) fail(ErrorKind::ExcludedRing, "Z_1 is the zero ring, which is excluded");
  Natural n = 1, phi = 1;
  for (const auto& pp : f.powers()) {
    const Natural p(pp.prime);
    n *= pow(p, pp.exponent);
    phi *= pow(p, pp.exponent - 1) * (p - Natural(1));
  }
  return n - phi - Natural(1);
}

std::optional<Natural> max_ann_size_zn(const factor::Factorization& f) {
  if (f.empty()) fail(ErrorKind::ExcludedRing, "Z_1 is the zero ring, which is excluded");
  if (f.size() == 1 && f.powers().front().exponent == 1) return std::nullopt;
  return f.value() / Natural(f.powers().front().prime);
}

BoundsReport make_bounds_report(const Natural& order, const Natural& zcount,
                                const std::optional<Natural>& maxann, const Rational& exact) {
  BoundsReport r;
  r.order = order;
  r.zcount = zcount;
  r.maxann = maxann;
  r.exact = exact;
  r.lower = lower_bound(order, zcount);
  r.upper = upper_bound(order, zcount, maxann.value_or(Natural(1)));
  r.global_cap = global_cap();
  r.refined_cap = refined_cap(order);
  r.all_hold = r.lower <= r.exact && r.exact <= r.upper && r.exact <= r.refined_cap &&
               r.exact <= r.global_cap;
  return r;
}

BoundsReport bounds_report(const ring::RingSpec& spec, const ring::Limits& limits) {
  const ring::AnnProfile profile = ring::ann_profile(spec, limits);
  const Natural order = ring::ring_order(spec);
  Natural zcount = 0;
  std::optional<Natural> maxann;
  for (const auto& [size, count] : profile.zero_divisors) {
    zcount += count;
    maxann = size;  // map is ordered, so the last key wins
  }
  const Rational exact = Rational::make(profile.annihilating_pairs(), order * order);
  return make_bounds_report(order, zcount, maxann, exact);
}

}  // namespace zeroprod::formulas
