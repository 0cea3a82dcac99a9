#include "umbral/expression.hpp"

#include <cctype>

#include "umbral/error.hpp"

namespace umbral {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalPolynomial parse() {
    RationalPolynomial p = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::SyntaxError) const {
    fail_at(what, pos_, kind);
  }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos, ErrorKind kind) const {
    throw Error(kind, what + " at column " + std::to_string(pos + 1), static_cast<long>(pos + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalPolynomial expr() {
    RationalPolynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RationalPolynomial term() {
    RationalPolynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  RationalPolynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalPolynomial power() {
    RationalPolynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    RationalPolynomial exponent;
    if (accept('-')) {
      exponent = -atom();
    } else {
      exponent = atom();
    }
    if (exponent.degree() > 0 || !is_integer(exponent[0]))
      fail_at("exponent must be an integer constant", at, ErrorKind::SyntaxError);
    if (exponent[0] < 0) fail_at("negative exponent", at, ErrorKind::NegativeExponent);
    const auto n = to_int64(exponent[0]);
    if (n > 4096) fail_at("exponent too large", at, ErrorKind::SyntaxError);
    return pow(base, static_cast<int>(n));
  }

  RationalPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalPolynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      reject_implicit();
      return RationalPolynomial::monomial(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected denominator");
        const std::size_t at = pos_;
        const Rational den = digits();
        if (den == 0) fail_at("zero denominator", at, ErrorKind::SyntaxError);
        value /= den;
      }
      reject_implicit();
      return RationalPolynomial::constant(value);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
  }

  // "2x", "x2", "x(" and similar juxtapositions.
  void reject_implicit() {
    std::size_t look = pos_;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    if (look < text_.size()) {
      const char c = text_[look];
      if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
        fail_at("implicit multiplication is not allowed", look, ErrorKind::SyntaxError);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string render(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int n = p.degree(); n >= 0; --n) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string monomial = n == 0 ? "" : n == 1 ? "x" : "x^" + std::to_string(n);
    if (monomial.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += monomial;
    else
      out += to_string(magnitude) + "*" + monomial;
  }
  return out;
}

}  // namespace umbral
