#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace olap {

// Exact rational number. Similarity values and classification metrics are
// small fractions of small integer counts; keeping them exact lets tests
// compare against published values without float drift.
//
// Invariants: den > 0, gcd(|num|, den) == 1, zero is 0/1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_int(std::int64_t v) { return Rational(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;  // throws Error on /0

  bool operator==(const Rational& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  std::strong_ordering operator<=>(const Rational& other) const;

  // "5/8", "1/1", "0/1"
  std::string fraction_str() const;
  // Decimal rendering rounded half away from zero: "0.625", "0.222", "1.000"
  std::string decimal_str(int places = 3) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace olap
