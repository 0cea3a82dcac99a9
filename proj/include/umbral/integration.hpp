#pragma once

#include <cstdint>
#include <optional>

#include "umbral/grid_function.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/psi_sequence.hpp"

namespace umbral {

/// Canonical psi-antiderivative: (x - center)^m -> (x - center)^{m+1} / (m+1)_psi,
/// with zero constant term in the (x - center) basis.
RationalPolynomial psi_antiderivative(const RationalPolynomial& p, const PsiSequence& psi,
                                      const Rational& center = 0);

/// F(b) - F(a) with F the canonical psi-antiderivative.
Rational psi_integrate(const RationalPolynomial& p, const PsiSequence& psi, const Rational& a, const Rational& b,
                       const Rational& center = 0);

struct QuadratureResult {
  enum class Mode { Symbolic, Numeric };

  Mode mode = Mode::Symbolic;
  /// Exact value (symbolic mode).
  Rational exact = 0;
  /// Decimal value; in symbolic mode the rounded exact value.
  double value = 0;
  int terms_used = 0;
  /// |value - exact| <= tail_bound (numeric mode only): geometric tail plus
  /// a floating-point rounding allowance.
  double tail_bound = 0;
};

/// Stopping rule for the numeric Jackson sum: a target tail bound, or a fixed
/// number of terms.
struct JacksonStop {
  std::optional<double> tolerance;
  std::optional<int> terms;
};

/// Closed form of the Jackson integral from 0 to z of a polynomial,
///   (1-q) z sum_k p(q^k z) q^k = sum_n c_n z^{n+1} (1-q)/(1-q^{n+1}),
/// for 0 < q < 1 (QOutOfRange otherwise). `from` != 0 subtracts the integral
/// up to `from`.
QuadratureResult jackson_symbolic(const RationalPolynomial& p, const Rational& q, const Rational& from,
                                  const Rational& to);

/// Truncated Jackson series in double precision.
QuadratureResult jackson_numeric(const RationalPolynomial& p, const Rational& q, const Rational& from,
                                 const Rational& to, const JacksonStop& stop);

/// Iterated-integral Cauchy kernel:
///   (a^k f)(x) = int_base^x (x-t)^{k-1}/(k-1)! f(t) dt, computed exactly.
RationalPolynomial cauchy_kernel_integral(const RationalPolynomial& f, int k, const Rational& base);

/// Summation Cauchy kernel:
///   (a^k f)(x) = sum_{r=base}^{x-1} (x-r-1)^{(k-1) falling}/(k-1)! f(r).
/// The polynomial version evaluates the kernel at integer points and
/// interpolates; base must be an integer (NonIntegerGridArg).
RationalPolynomial cauchy_kernel_summation(const RationalPolynomial& f, int k, const Rational& base = 0);
/// Grid version on 0..f.last()+k; requires f.first() == 0.
GridFunction cauchy_kernel_summation(const GridFunction& f, int k);

/// k-fold application of the single-step operators, for comparison with the
/// kernels above.
RationalPolynomial iterated_integral(const RationalPolynomial& f, int k, const Rational& base);
RationalPolynomial iterated_summation(const RationalPolynomial& f, int k, const Rational& base = 0);
GridFunction iterated_summation(const GridFunction& f, int k);

struct PerPartesResult {
  /// int_a^b (f * d_psi g) d_psi t
  Rational lhs;
  /// [(f * g)(t)]_a^b - int_a^b ((Df) * g) d_psi t
  Rational rhs;
  bool pass = false;
};

/// Integration by parts for the psi-product (star product and
/// psi-derivative taken in the monomial basis).
PerPartesResult per_partes(const RationalPolynomial& f, const RationalPolynomial& g, const PsiSequence& psi,
                           const Rational& a, const Rational& b);

}  // namespace umbral
