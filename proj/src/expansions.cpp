#include "umbral/expansions.hpp"

#include <functional>

#include "umbral/error.hpp"
#include "umbral/integration.hpp"
#include "umbral/operators.hpp"
#include "umbral/star_product.hpp"

namespace umbral {

namespace {

using Sampler = std::function<Rational(std::int64_t)>;

void finish(ExpansionReport& r) {
  r.reconstruction = r.remainder;
  for (const auto& t : r.terms) r.reconstruction += t;
  r.residual = r.target - r.reconstruction;
}

Rational nth_derivative_at(RationalPolynomial f, int k, const Rational& x) {
  for (int i = 0; i < k; ++i) f = f.derivative();
  return f(x);
}

// (Delta^k f)(x) = sum_j (-1)^{k-j} C(k,j) f(x+j)
Rational forward_difference_at(const Sampler& f, int k, std::int64_t x) {
  Rational sum = 0;
  for (int j = 0; j <= k; ++j) sum += ((k - j) % 2 ? -1 : 1) * binomial(k, j) * f(x + j);
  return sum;
}

// (Nabla^k f)(x) = sum_j (-1)^j C(k,j) f(x-j)
Rational backward_difference_at(const Sampler& f, int k, std::int64_t x) {
  Rational sum = 0;
  for (int j = 0; j <= k; ++j) sum += (j % 2 ? -1 : 1) * binomial(k, j) * f(x - j);
  return sum;
}

void check_order(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "expansion order must be >= 0");
}

ExpansionReport delta_engine(const Sampler& f, std::int64_t point, int n) {
  check_order(n);
  if (point < 0) throw Error(ErrorKind::InvalidArgument, "delta expansion point must be >= 0");
  ExpansionReport r;
  r.engine = "delta";
  r.point = point;
  r.order = n;
  for (int k = 0; k <= n; ++k) {
    const Rational weight = falling_power(Rational(point), k) / factorial(k);
    r.terms.push_back(weight == 0 ? Rational(0) : weight * forward_difference_at(f, k, 0));
  }
  for (std::int64_t s = 0; s <= point - 1; ++s) {
    const Rational weight = falling_power(Rational(point - s - 1), n) / factorial(n);
    if (weight != 0) r.remainder += weight * forward_difference_at(f, n + 1, s);
  }
  r.target = f(point);
  r.target_label = "f(" + std::to_string(point) + ")";
  finish(r);
  return r;
}

ExpansionReport maclaurin_engine(const Sampler& f, std::int64_t alpha, int n) {
  check_order(n);
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "maclaurin expansion needs alpha >= 1");
  ExpansionReport r;
  r.engine = "maclaurin";
  r.alpha = alpha;
  r.point = 0;
  r.order = n;
  for (int k = 0; k <= n; ++k) {
    const Rational weight = falling_power(Rational(alpha), k) / factorial(k) * (k % 2 ? 1 : -1);
    r.terms.push_back(weight == 0 ? Rational(0) : weight * backward_difference_at(f, k, alpha));
  }
  Rational sum = 0;
  for (std::int64_t s = 0; s <= alpha - 1; ++s) {
    const Rational weight = falling_power(Rational(s), n) / factorial(n);
    if (weight != 0) sum += weight * backward_difference_at(f, n + 1, s + 1);
  }
  r.remainder = (n % 2 ? -1 : 1) * sum;
  r.target = -f(0);
  r.target_label = "-f(0)";
  finish(r);
  return r;
}

Sampler polynomial_sampler(const RationalPolynomial& f) {
  return [f](std::int64_t x) { return f(Rational(x)); };
}

Sampler grid_sampler(const GridFunction& f) {
  return [&f](std::int64_t x) { return f.at(x); };
}

}  // namespace

ExpansionReport classical_bt(const RationalPolynomial& f, const Rational& alpha, const Rational& point, int n) {
  check_order(n);
  ExpansionReport r;
  r.engine = "classical";
  r.alpha = alpha;
  r.point = point;
  r.order = n;
  for (int k = 0; k <= n; ++k)
    r.terms.push_back(pow(point - alpha, k) * nth_derivative_at(f, k, alpha) / factorial(k));
  // Integrand in t: (point - t)^n / n! * f^(n+1)(t).
  RationalPolynomial high = f;
  for (int i = 0; i <= n; ++i) high = high.derivative();
  const RationalPolynomial kernel = pow(RationalPolynomial{point, Rational(-1)}, n) * (1 / factorial(n));
  const RationalPolynomial antiderivative = (kernel * high).antiderivative();
  r.remainder = antiderivative(point) - antiderivative(alpha);
  r.target = f(point);
  r.target_label = "f(" + to_string(point) + ")";
  finish(r);
  return r;
}

ExpansionReport delta_bt(const RationalPolynomial& f, std::int64_t point, int order) {
  return delta_engine(polynomial_sampler(f), point, order);
}

ExpansionReport delta_bt(const GridFunction& f, std::int64_t point, int order) {
  return delta_engine(grid_sampler(f), point, order);
}

ExpansionReport maclaurin_bt(const RationalPolynomial& f, std::int64_t alpha, int order) {
  return maclaurin_engine(polynomial_sampler(f), alpha, order);
}

ExpansionReport maclaurin_bt(const GridFunction& f, std::int64_t alpha, int order) {
  return maclaurin_engine(grid_sampler(f), alpha, order);
}

ExpansionReport psi_bt(const RationalPolynomial& f, const Rational& alpha, const Rational& point, int n,
                       const PsiSequence& psi, const Rational& center) {
  check_order(n);
  const int cap = std::max(f.degree(), 0) + 1;
  const RationalOperator lower = ops::psi_derivative(psi, cap, center);
  const RationalOperator raise = ops::psi_multiply(psi, cap, center);

  ExpansionReport r;
  r.engine = "psi";
  r.alpha = alpha;
  r.point = point;
  r.order = n;
  r.center = center;
  r.psi_label = psi.label();

  RationalPolynomial derived = f;  // d_psi^k f
  Rational target = 0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) derived = lower.apply(derived);
    RationalPolynomial term = derived;
    for (int i = 0; i < k; ++i) term = raise.apply(term);
    term *= Rational(k % 2 ? -1 : 1) / factorial(k);
    r.terms.push_back(term(alpha));
    r.terms_at_point.push_back(term(point));
    target += term(point);
  }
  RationalPolynomial integrand = lower.apply(derived);
  for (int i = 0; i < n; ++i) integrand = raise.apply(integrand);
  r.remainder = Rational(n % 2 ? -1 : 1) / factorial(n) * psi_integrate(integrand, psi, alpha, point, center);
  r.target = target;
  r.target_label = "G(" + to_string(point) + ")";
  finish(r);
  return r;
}

RationalPolynomial literal_star_taylor_sum(const RationalPolynomial& f, const Rational& alpha, int order,
                                           const PsiSequence& psi) {
  RationalPolynomial out;
  RationalPolynomial derived = f;
  const RationalPolynomial base{-alpha, Rational(1)};
  for (int k = 0; k <= order; ++k) {
    if (k > 0) derived = psi_lower(derived, psi);
    const RationalPolynomial star_power_poly = pow(base, k) * psi.star_coefficient(k);
    const RationalPolynomial value = RationalPolynomial::constant(derived(alpha));
    out += star(star_power_poly, value, psi, k) * (1 / factorial(k));
  }
  return out;
}

}  // namespace umbral
