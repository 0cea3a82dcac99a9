#pragma once

#include <cstdint>

#include "umbral/grid_function.hpp"
#include "umbral/linear_operator.hpp"
#include "umbral/psi_sequence.hpp"

namespace umbral::ops {

// Every factory builds the operator on polynomials of degree <= cap.

RationalOperator identity(int cap);
/// d/dx.
RationalOperator derivative(int cap);
/// Multiplication by x.
RationalOperator multiply_x(int cap);
/// Multiplication by a fixed polynomial.
RationalOperator multiply_by(const RationalPolynomial& factor, int cap);
/// Divided difference at zero: x^n -> x^{n-1}, constants -> 0.
RationalOperator divided_difference(int cap);
/// f -> f(alpha) as a constant polynomial.
RationalOperator evaluation(const Rational& alpha, int cap);
/// f -> integral of f from alpha to x.
RationalOperator integral_from(const Rational& alpha, int cap);
/// (E^a f)(x) = f(x + a).
RationalOperator translation(const Rational& a, int cap);
/// Forward difference E - 1.
RationalOperator forward_difference(int cap);
/// Backward difference 1 - E^{-1}.
RationalOperator backward_difference(int cap);
/// (a f)(x) = sum_{k=0}^{x-1} f(k): the polynomial P with P(0) = 0, delta P = f.
RationalOperator summation(int cap);
/// (Q f)(x) = f(q x).
RationalOperator dilation(const Rational& q, int cap);

/// x^n -> n_psi x^{n-1} on powers of (x - center).
RationalOperator psi_derivative(const PsiSequence& psi, int cap, const Rational& center = 0);
/// x^n -> (n+1)/(n+1)_psi x^{n+1} on powers of (x - center).
RationalOperator psi_multiply(const PsiSequence& psi, int cap, const Rational& center = 0);
/// x^n -> x^{n+1}/(n+1)_psi on powers of (x - center); right inverse of psi_derivative.
RationalOperator psi_integral(const PsiSequence& psi, int cap, const Rational& center = 0);
/// x^m -> (m+1)_psi x^m, so that psi_derivative = psi_number ∘ divided_difference.
RationalOperator psi_number(const PsiSequence& psi, int cap);

/// E^{-center} ∘ op ∘ E^{center}: op transported to act on powers of (x - center).
RationalOperator centered(const RationalOperator& op, const Rational& center);

/// Grid counterpart of the polynomial operator x ∘ E^{-1}: (g)(x) = x f(x-1).
GridFunction multiply_x_after_back_shift(const GridFunction& f);

}  // namespace umbral::ops
