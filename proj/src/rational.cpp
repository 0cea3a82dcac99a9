#include "umbral/rational.hpp"

#include <charconv>

#include "umbral/error.hpp"

namespace umbral {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPsiValue: return "ZeroPsiValue";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::GridDomainTooSmall: return "GridDomainTooSmall";
    case ErrorKind::NonIntegerGridArg: return "NonIntegerGridArg";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::UnknownAxiom: return "UnknownAxiom";
    case ErrorKind::QOutOfRange: return "QOutOfRange";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::MixedPsiContext: return "MixedPsiContext";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  const Integer d{std::string(den)};
  if (d == 0)
    throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational r{Integer{std::string(num)}, d};
  return negative ? Rational(-r) : r;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorKind::NonIntegerGridArg, to_string(r) + " is not an integer");
  return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
}

Rational factorial(int n) {
  Rational out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

Rational pow(const Rational& base, int exponent) {
  Rational out = 1;
  Rational b = base;
  if (exponent < 0) {
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

}  // namespace umbral
