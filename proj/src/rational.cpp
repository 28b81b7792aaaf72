#include "olap/rational.hpp"

#include <cstdlib>
#include <numeric>

#include "olap/error.hpp"

namespace olap {

namespace {

std::int64_t power_of_ten(int places) {
  std::int64_t p = 1;
  for (int i = 0; i < places; ++i) p *= 10;
  return p;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return Rational(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
  // Cross-reduce before multiplying to keep intermediates small.
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, other.den_);
  std::int64_t g2 = std::gcd(other.num_ < 0 ? -other.num_ : other.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((num_ / g1) * (other.num_ / g2), (den_ / g2) * (other.den_ / g1));
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) throw Error("rational division by zero");
  return *this * Rational(other.den_, other.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  __int128 lhs = static_cast<__int128>(num_) * other.den_;
  __int128 rhs = static_cast<__int128>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::fraction_str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal_str(int places) const {
  std::int64_t scale = power_of_ten(places);
  std::int64_t n = num_ < 0 ? -num_ : num_;
  // round(n * scale / den) with ties away from zero
  std::int64_t scaled = (2 * n * scale + den_) / (2 * den_);
  std::string out;
  if (num_ < 0 && scaled != 0) out += '-';
  out += std::to_string(scaled / scale);
  if (places > 0) {
    std::string digits = std::to_string(scaled % scale);
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace olap
