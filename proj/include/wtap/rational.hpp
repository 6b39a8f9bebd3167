#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "wtap/core.hpp"

namespace wtap {

// Exact rational with 64-bit numerator/denominator. Arithmetic is carried out
// in 128 bits and reduced; a result that does not fit throws
// std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Accepts "p", "p/q", "-p/q" and plain decimals such as "2.75" or "1e-3".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string to_string() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Smallest integer >= value.
  std::int64_t ceil() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(Int128 num, Int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Int128 gcd128(Int128 a, Int128 b);

}  // namespace wtap
