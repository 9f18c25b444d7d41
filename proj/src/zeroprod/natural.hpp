#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeroprod {

// Arbitrary-precision nonnegative integer. Subtraction below zero throws
// instead of wrapping.
class Natural {
 public:
  using Backend = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic use

  static Natural from_backend(Backend value);
  static Natural parse(std::string_view decimal);

  const Backend& backend() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool fits_u64() const noexcept;
  std::optional<std::uint64_t> to_u64() const noexcept;
  std::uint64_t to_u64_checked() const;  // throws OutOfRange
  std::size_t bit_length() const noexcept;
  std::string to_string() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b) noexcept {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Natural(Backend value) : value_(std::move(value)) {}

  Backend value_;
};

Natural pow(const Natural& base, std::uint64_t exponent);

// gcd(0, b) = b.
Natural gcd(Natural a, Natural b);

Natural isqrt(const Natural& n);

}  // namespace zeroprod
