#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chowring {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Textual form is "[sign]p" or "[sign]p/q".
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}
  Rational(std::int64_t num, std::int64_t den);

  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;
  Rational pow(unsigned exponent) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace chowring
