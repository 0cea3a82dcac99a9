#include "umbral/operators.hpp"

#include <vector>

namespace umbral::ops {

namespace {

using Poly = RationalPolynomial;

Poly mono(int n, const Rational& c = 1) { return Poly::monomial(n, c); }

// Stirling numbers of the second kind S(n, k), n, k <= cap.
std::vector<std::vector<Rational>> stirling2(int cap) {
  std::vector<std::vector<Rational>> s(cap + 1, std::vector<Rational>(cap + 1, Rational(0)));
  s[0][0] = 1;
  for (int n = 1; n <= cap; ++n)
    for (int k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  return s;
}

}  // namespace

RationalOperator identity(int cap) { return RationalOperator::identity(cap); }

RationalOperator derivative(int cap) {
  return RationalOperator::from_basis_action(cap, -1, "D", [](int m) {
    return m == 0 ? Poly{} : mono(m - 1, m);
  });
}

RationalOperator multiply_x(int cap) {
  return RationalOperator::from_basis_action(cap, 1, "x", [](int m) { return mono(m + 1); });
}

RationalOperator multiply_by(const RationalPolynomial& factor, int cap) {
  return RationalOperator::from_basis_action(cap, std::max(factor.degree(), 0), "mul",
                                             [&](int m) { return factor * mono(m); });
}

RationalOperator divided_difference(int cap) {
  return RationalOperator::from_basis_action(cap, -1, "d0", [](int m) {
    return m == 0 ? Poly{} : mono(m - 1);
  });
}

RationalOperator evaluation(const Rational& alpha, int cap) {
  return RationalOperator::from_basis_action(cap, 0, "eps(" + to_string(alpha) + ")", [&](int m) {
    return Poly::constant(pow(alpha, m));
  });
}

RationalOperator integral_from(const Rational& alpha, int cap) {
  return RationalOperator::from_basis_action(cap, 1, "int(" + to_string(alpha) + ")", [&](int m) {
    return Poly::monomial(m + 1, Rational(1, m + 1)) - Poly::constant(pow(alpha, m + 1) / (m + 1));
  });
}

RationalOperator translation(const Rational& a, int cap) {
  return RationalOperator::from_basis_action(cap, 0, "E^" + to_string(a),
                                             [&](int m) { return mono(m).shifted(a); });
}

RationalOperator forward_difference(int cap) {
  return RationalOperator::from_basis_action(cap, -1, "Delta", [](int m) {
    return mono(m).shifted(1) - mono(m);
  });
}

RationalOperator backward_difference(int cap) {
  return RationalOperator::from_basis_action(cap, -1, "Nabla", [](int m) {
    return mono(m) - mono(m).shifted(-1);
  });
}

RationalOperator summation(int cap) {
  // x^m = sum_k S(m,k) x^(k falling), and the sum of x^(k falling) over
  // 0..x-1 is x^(k+1 falling)/(k+1).
  const auto s = stirling2(cap);
  std::vector<Poly> falling;
  for (int k = 0; k <= cap + 1; ++k) falling.push_back(falling_power_poly(k));
  return RationalOperator::from_basis_action(cap, 1, "a", [&](int m) {
    Poly out;
    for (int k = 0; k <= m; ++k) out += falling[k + 1] * (s[m][k] / (k + 1));
    return out;
  });
}

RationalOperator dilation(const Rational& q, int cap) {
  return RationalOperator::from_basis_action(cap, 0, "Q(" + to_string(q) + ")",
                                             [&](int m) { return mono(m, pow(q, m)); });
}

RationalOperator centered(const RationalOperator& op, const Rational& center) {
  if (center == 0) return op;
  const RationalOperator in = translation(center, op.cap());
  const RationalOperator out = translation(-center, static_cast<int>(op.matrix().rows()) - 1);
  return compose(out, compose(op, in)).named(op.name() + "@" + to_string(center));
}

RationalOperator psi_derivative(const PsiSequence& psi, int cap, const Rational& center) {
  auto op = RationalOperator::from_basis_action(cap, -1, "d_psi", [&](int m) {
    return m == 0 ? Poly{} : mono(m - 1, psi.value(m));
  });
  return centered(op, center);
}

RationalOperator psi_multiply(const PsiSequence& psi, int cap, const Rational& center) {
  auto op = RationalOperator::from_basis_action(cap, 1, "x_psi", [&](int m) {
    return mono(m + 1, Rational(m + 1) / psi.value(m + 1));
  });
  return centered(op, center);
}

RationalOperator psi_integral(const PsiSequence& psi, int cap, const Rational& center) {
  auto op = RationalOperator::from_basis_action(cap, 1, "int_psi", [&](int m) {
    return mono(m + 1, 1 / psi.value(m + 1));
  });
  return centered(op, center);
}

RationalOperator psi_number(const PsiSequence& psi, int cap) {
  return RationalOperator::from_basis_action(cap, 0, "n_psi",
                                             [&](int m) { return mono(m, psi.value(m + 1)); });
}

GridFunction multiply_x_after_back_shift(const GridFunction& f) {
  return multiply_by_x(shift(f, -1));
}

}  // namespace umbral::ops
