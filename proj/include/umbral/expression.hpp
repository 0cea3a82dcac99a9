#pragma once

#include <string>
#include <string_view>

#include "umbral/polynomial.hpp"

namespace umbral {

/// Parses a univariate polynomial expression:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' exponent)?
///   atom   := number | 'x' | '(' expr ')'
///   number := digits ('/' digits)?
///
/// so '^' binds tighter than unary minus, which binds tighter than '*'.
/// Exponents must evaluate to nonnegative integer constants. Implicit
/// multiplication is rejected. Throws SyntaxError or NegativeExponent with the
/// 1-based column in Error::detail().
RationalPolynomial parse_expression(std::string_view text);

/// Renders p in the grammar above, e.g. "1/2*x^2 - 3". The zero polynomial
/// renders as "0". parse_expression(render(p)) == p.
std::string render(const RationalPolynomial& p);

}  // namespace umbral
