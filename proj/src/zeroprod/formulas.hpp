#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "zeroprod/factor.hpp"
#include "zeroprod/natural.hpp"
#include "zeroprod/rational.hpp"
#include "zeroprod/ring.hpp"

namespace zeroprod::formulas {

/// P(Z_{p^k}) = ((k+1)p - k) / p^(k+1).
///
/// Throws InvalidInput when p is not prime or k = 0.
Rational p_zpk(const Natural& p, std::uint64_t k);

/// Product of p_zpk over the prime powers of n. Throws ExcludedRing for the
/// empty factorization (n = 1).
Rational p_zn_from_factorization(const factor::Factorization& f);

/// Throws ExcludedRing for n <= 1.
Rational p_zn(const Natural& n);

/// Multiplicativity over direct products; an empty list yields 1.
Rational p_product(std::span<const Rational> ps);

/// (2l + zcount - 1) / l^2, where zcount = |Z(R)|.
Rational lower_bound(const Natural& l, const Natural& zcount);

/// (2l + (m - 1) zcount - 1) / l^2, where m is the largest annihilator size
/// over Z(R). When zcount = 0 the caller passes m = 1.
Rational upper_bound(const Natural& l, const Natural& zcount, const Natural& m);

/// (2l - 1) / l^2
Rational p_integral_domain(const Natural& l);

/// Exact value when every x in Z(R) has |Ann(x)| = m; same arithmetic as
/// upper_bound.
Rational p_uniform_ann(const Natural& l, const Natural& zcount, const Natural& m);

/// 1/2 + 1/l^2
Rational refined_cap(const Natural& l);

/// 3/4
Rational global_cap();

/// Annihilator profile of Z_{p^k} from the valuation partition: the elements
/// of p-adic valuation exactly i (1 <= i < k) number p^(k-i) - p^(k-i-1) and
/// each has annihilator of size p^i.
ring::AnnProfile ann_profile_zpk(const Natural& p, std::uint64_t k);

/// |Z(Z_n)| = n - phi(n) - 1 from the factorization of n >= 2.
Natural zero_divisor_count_zn(const factor::Factorization& f);

/// Largest |Ann(x)| over Z(Z_n), i.e. n / (smallest prime of n); absent for
/// prime n.
std::optional<Natural> max_ann_size_zn(const factor::Factorization& f);

struct BoundsReport {
  Natural order;
  Natural zcount;
  std::optional<Natural> maxann;
  Rational lower;
  Rational upper;
  Rational exact;
  Rational global_cap;
  Rational refined_cap;
  bool all_hold = false;
};

/// Builds a report from measured quantities. all_hold is
/// lower <= exact <= upper, exact <= refined_cap and exact <= global_cap.
BoundsReport make_bounds_report(const Natural& order, const Natural& zcount,
                                const std::optional<Natural>& maxann, const Rational& exact);

/// Measures |Z(R)|, m and P(R) on the ring itself; single-enumeration cap.
BoundsReport bounds_report(const ring::RingSpec& spec, const ring::Limits& limits = {});

}  // namespace zeroprod::formulas
