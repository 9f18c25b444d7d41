#include "zeroprod/natural.hpp"

#include <limits>
#include <utility>

#include "zeroprod/error.hpp"

namespace zeroprod {

Natural Natural::from_backend(Backend value) {
  if (value.sign() < 0) fail(ErrorKind::InvalidInput, "negative value for Natural");
  return Natural(std::move(value));
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) fail(ErrorKind::Parse, "empty integer literal");
  Backend value = 0;
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      fail(ErrorKind::Parse, "invalid digit in integer literal '" + std::string(decimal) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return Natural(std::move(value));
}

bool Natural::fits_u64() const noexcept {
  return value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::optional<std::uint64_t> Natural::to_u64() const noexcept {
  if (!fits_u64()) return std::nullopt;
  return value_.convert_to<std::uint64_t>();
}

std::uint64_t Natural::to_u64_checked() const {
  auto v = to_u64();
  if (!v) fail(ErrorKind::OutOfRange, to_string() + " exceeds the supported 64-bit range");
  return *v;
}

std::size_t Natural::bit_length() const noexcept {
  if (value_.is_zero()) return 0;
  return boost::multiprecision::msb(value_) + 1;
}

std::string Natural::to_string() const { return value_.str(); }

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) fail(ErrorKind::ContractViolation, "Natural subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) fail(ErrorKind::ZeroDenominator, "modulo by zero");
  value_ %= rhs.value_;
  return *this;
}

Natural pow(const Natural& base, std::uint64_t exponent) {
  Natural result = 1;
  Natural square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

Natural gcd(Natural a, Natural b) {
  while (!b.is_zero()) {
    Natural r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Natural isqrt(const Natural& n) {
  return Natural::from_backend(boost::multiprecision::sqrt(n.backend()));
}

}  // namespace zeroprod
