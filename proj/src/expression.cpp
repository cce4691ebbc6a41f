#include "braidcert/expression.hpp"

#include <cctype>

#include "braidcert/error.hpp"

namespace braidcert {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

  Rational parse() {
    Rational v = parse_or();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw BraidError(ErrorCode::kParseError, "expression column " + std::to_string(pos_ + 1) + ": " +
                                                 why + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  static Rational truth(bool b) { return Rational(b ? 1 : 0); }

  Rational parse_or() {
    Rational v = parse_and();
    while (accept("||")) {
      Rational r = parse_and();
      v = truth(v.sign() != 0 || r.sign() != 0);
    }
    return v;
  }

  Rational parse_and() {
    Rational v = parse_cmp();
    while (accept("&&")) {
      Rational r = parse_cmp();
      v = truth(v.sign() != 0 && r.sign() != 0);
    }
    return v;
  }

  Rational parse_cmp() {
    Rational v = parse_sum();
    if (accept("==")) return truth(v == parse_sum());
    if (accept("!=")) return truth(v != parse_sum());
    if (accept("<=")) return truth(v <= parse_sum());
    if (accept(">=")) return truth(v >= parse_sum());
    if (accept("<")) return truth(v < parse_sum());
    if (accept(">")) return truth(v > parse_sum());
    return v;
  }

  Rational parse_sum() {
    Rational v = parse_term();
    while (true) {
      if (accept("+")) {
        v += parse_term();
      } else if (accept("-")) {
        v -= parse_term();
      } else {
        return v;
      }
    }
  }

  Rational parse_term() {
    Rational v = parse_unary();
    while (true) {
      if (accept("*")) {
        v *= parse_unary();
      } else if (accept("/")) {
        Rational r = parse_unary();
        if (r.sign() == 0) fail("division by zero");
        v /= r;
      } else {
        return v;
      }
    }
  }

  Rational parse_unary() {
    if (accept("-")) return -parse_unary();
    if (accept("!")) return truth(parse_unary().sign() == 0);
    return parse_primary();
  }

  Rational parse_primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept("(")) {
      Rational v = parse_or();
      expect(")");
      return v;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      skip();
      if (pos_ < text_.size() && text_[pos_] == '(') return call(name);
      for (const auto& [key, value] : bindings_) {
        if (key == name) return value;
      }
      pos_ = start;
      fail("unbound name '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  Rational call(std::string_view name) {
    expect("(");
    std::vector<Rational> args{parse_or()};
    while (accept(",")) args.push_back(parse_or());
    expect(")");
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail(std::string(name) + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "abs") { arity(1); return args[0].abs(); }
    if (name == "floor") { arity(1); return Rational(args[0].floor()); }
    if (name == "ceil") { arity(1); return Rational(args[0].ceil()); }
    if (name == "min") { arity(2); return min(args[0], args[1]); }
    if (name == "max") { arity(2); return max(args[0], args[1]); }
    if (name == "gcd") {
      arity(2);
      if (!args[0].is_integer() || !args[1].is_integer()) fail("gcd of non-integers");
      return Rational(BigInt(boost::multiprecision::gcd(args[0].numerator(), args[1].numerator())));
    }
    fail("unknown function '" + std::string(name) + "'");
  }

  std::string_view text_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational evaluate(std::string_view expression, const Bindings& bindings) {
  return Parser(expression, bindings).parse();
}

bool holds(std::string_view expression, const Bindings& bindings) {
  return evaluate(expression, bindings).sign() != 0;
}

}  // namespace braidcert
