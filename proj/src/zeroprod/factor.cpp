#include "zeroprod/factor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "zeroprod/error.hpp"
#include "zeroprod/modmath.hpp"

namespace zeroprod::factor {
namespace {

using u64 = std::uint64_t;

constexpr u64 kTrialBound = 10000;

using detail::mul_mod;

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// The first twelve primes as witnesses are sufficient for every n < 3.3e24.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 a) {
  const u64 d_shift = static_cast<u64>(std::countr_zero(n - 1));
  const u64 d = (n - 1) >> d_shift;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (u64 r = 1; r < d_shift; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-finding variant of Pollard rho. The polynomial is
// x^2 + c with x0 = 2; callers walk c = 1, 2, 3, ... until a proper factor
// falls out, so every run is reproducible.
u64 brent_rho(u64 n, u64 c) {
  constexpr u64 kBatch = 128;
  auto step = [&](u64 v) { return static_cast<u64>((detail::u128{mul_mod(v, v, n)} + c) % n); };
  u64 y = 2, x = 2, saved = 2, g = 1, q = 1;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = step(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      saved = y;
      const u64 limit = std::min(kBatch, r - k);
      for (u64 i = 0; i < limit; ++i) {
        y = step(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    // batch overshot; replay one step at a time
    do {
      saved = step(saved);
      g = std::gcd(x > saved ? x - saved : saved - x, n);
    } while (g == 1);
  }
  return g;
}

u64 rho_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    const u64 d = brent_rho(n, c);
    if (d != n) return d;
  }
}

void split_into(u64 n, std::map<u64, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = rho_factor(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> powers) : powers_(std::move(powers)) {
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i].exponent == 0 || !is_prime(powers_[i].prime)) {
      fail(ErrorKind::InvalidInput, "factorization entry is not a prime power");
    }
    if (i > 0 && powers_[i - 1].prime >= powers_[i].prime) {
      fail(ErrorKind::InvalidInput, "factorization primes must be strictly increasing");
    }
  }
}

Natural Factorization::value() const {
  Natural n = 1;
  for (const auto& pp : powers_) n *= pow(Natural(pp.prime), pp.exponent);
  return n;
}

std::string Factorization::to_text() const {
  if (powers_.empty()) return "1";
  std::string out;
  for (const auto& pp : powers_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

std::string Factorization::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (i > 0) out += ",";
    out += "[" + std::to_string(powers_[i].prime) + "," + std::to_string(powers_[i].exponent) + "]";
  }
  return out + "]";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                     [n](u64 a) { return strong_probable_prime(n, a); });
}

bool is_prime(const Natural& n) { return is_prime(n.to_u64_checked()); }

std::uint64_t find_nontrivial_factor(std::uint64_t n) {
  if (n < 4 || is_prime(n)) {
    fail(ErrorKind::ContractViolation,
         "find_nontrivial_factor needs a composite n >= 4, got " + std::to_string(n));
  }
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p == 0) return p;
  }
  return rho_factor(n);
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidInput, "cannot factorize 0");
  std::map<u64, std::uint32_t> found;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  split_into(n, found);
  std::vector<PrimePower> powers;
  powers.reserve(found.size());
  for (const auto& [p, k] : found) powers.push_back({p, k});
  return Factorization(std::move(powers));
}

Factorization factorize(const Natural& n) { return factorize(n.to_u64_checked()); }

}  // namespace zeroprod::factor
