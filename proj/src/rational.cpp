#include "chowring/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace chowring {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace chowring
