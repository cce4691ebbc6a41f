#include "braidcert/rational.hpp"

#include <cctype>

#include "braidcert/error.hpp"

namespace braidcert {

namespace mp = boost::multiprecision;

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStrandMismatch: return "StrandMismatch";
    case ErrorCode::kBadStrands: return "BadStrands";
    case ErrorCode::kBadLetter: return "BadLetter";
    case ErrorCode::kWordTooLong: return "WordTooLong";
    case ErrorCode::kReductionBudgetExceeded: return "ReductionBudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotThreeBraid: return "NotThreeBraid";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kBadGenus: return "BadGenus";
    case ErrorCode::kSplitBinding: return "SplitBinding";
  }
  return "UnknownError";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw BraidError(ErrorCode::kBadParameters, "rational with zero denominator");
  }
  // cpp_rational refuses a negative denominator.
  value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw BraidError(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  BigInt d = parse_int(den);
  if (d == 0) {
    throw BraidError(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_int(num), d);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

BigInt Rational::floor() const {
  BigInt n = numerator();
  BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::abs() const {
  Rational r;
  r.value_ = mp::abs(value_);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) {
    throw BraidError(ErrorCode::kBadParameters, "division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace braidcert
