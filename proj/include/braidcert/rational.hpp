#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidcert {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design of arithmetic
  Rational(const BigInt& n) : value_(n) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace braidcert
