#include "zeroprod/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "zeroprod/error.hpp"

namespace zeroprod {

Rational Rational::make(const Natural& num, const Natural& den) {
  if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "rational with zero denominator");
  if (num.is_zero()) return Rational();
  Natural g = gcd(num, den);
  return Rational(num / g, den / g);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(Natural::parse(text));
  return make(Natural::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

std::string Rational::to_decimal(unsigned digits) const {
  const Natural scale = pow(Natural(10), digits);
  // round(num * scale / den) with ties going up
  const Natural scaled = (num_ * scale * 2 + den_) / (den_ * 2);
  const Natural whole = scaled / scale;
  std::string out = whole.to_string();
  if (digits == 0) return out;
  std::string frac = (scaled % scale).to_string();
  out += '.';
  out.append(digits - frac.size(), '0');
  out += frac;
  return out;
}

double Rational::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_double;
  return static_cast<double>(Float(num_.backend()) / Float(den_.backend()));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.num().is_zero() || b.num().is_zero()) return Rational();
  // cross-reduce first so intermediates stay small
  const Natural g1 = gcd(a.num(), b.den());
  const Natural g2 = gcd(b.num(), a.den());
  return Rational::make((a.num() / g1) * (b.num() / g2), (a.den() / g2) * (b.den() / g1));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Rational abs_diff(const Rational& a, const Rational& b) {
  const Natural lhs = a.num() * b.den();
  const Natural rhs = b.num() * a.den();
  const Natural den = a.den() * b.den();
  return lhs >= rhs ? Rational::make(lhs - rhs, den) : Rational::make(rhs - lhs, den);
}

}  // namespace zeroprod
