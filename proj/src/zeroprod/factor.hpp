#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeroprod/natural.hpp"

namespace zeroprod::factor {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, exponents >= 1. Empty means n = 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> powers);

  const std::vector<PrimePower>& powers() const noexcept { return powers_; }
  bool empty() const noexcept { return powers_.empty(); }
  std::size_t size() const noexcept { return powers_.size(); }

  Natural value() const;
  // "2^2 * 3"; exponent 1 is omitted and n = 1 renders as "1".
  std::string to_text() const;
  // [[2,2],[3,1]]
  std::string to_json() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> powers_;
};

// Deterministic over the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;
// Throws OutOfRange above 2^64 - 1.
bool is_prime(const Natural& n);

// Any d with 1 < d < n and d | n. Throws ContractViolation for n < 4 or prime n.
std::uint64_t find_nontrivial_factor(std::uint64_t n);

// Throws InvalidInput for n = 0.
Factorization factorize(std::uint64_t n);
Factorization factorize(const Natural& n);

}  // namespace zeroprod::factor
