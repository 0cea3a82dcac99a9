#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace umbral {

/// Exact rational scalar. Always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
/// Requires is_integer(r).
std::int64_t to_int64(const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);
Rational pow(const Rational& base, int exponent);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace umbral
