#pragma once

#include <compare>
#include <string>

#include "zeroprod/natural.hpp"

namespace zeroprod {

// Nonnegative fraction kept in lowest terms with a positive denominator, so
// equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  // Reduces; throws ZeroDenominator when den == 0.
  static Rational make(const Natural& num, const Natural& den);
  static Rational integer(const Natural& value) { return Rational(value, 1); }
  // Accepts "num/den" or a bare integer.
  static Rational parse(std::string_view text);

  const Natural& num() const noexcept { return num_; }
  const Natural& den() const noexcept { return den_; }

  // Canonical "num/den"; the denominator is always printed.
  std::string to_string() const;
  // Fixed-point rendering with exactly `digits` fractional digits, rounded
  // half up.
  std::string to_decimal(unsigned digits) const;
  double to_double() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Rational(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {}

  Natural num_;
  Natural den_;
};

Rational operator*(const Rational& a, const Rational& b);
Rational operator+(const Rational& a, const Rational& b);
// |a - b|
Rational abs_diff(const Rational& a, const Rational& b);

}  // namespace zeroprod
