#include "umbral/integration.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/star_product.hpp"

namespace umbral {

RationalPolynomial psi_antiderivative(const RationalPolynomial& p, const PsiSequence& psi, const Rational& center) {
  const std::vector<Rational> c = rebase(p, center);
  std::vector<Rational> out(c.size() + 1, Rational(0));
  for (std::size_t m = 0; m < c.size(); ++m) out[m + 1] = c[m] / psi.value(static_cast<int>(m) + 1);
  return from_centered(out, center);
}

Rational psi_integrate(const RationalPolynomial& p, const PsiSequence& psi, const Rational& a, const Rational& b,
                       const Rational& center) {
  const RationalPolynomial antiderivative = psi_antiderivative(p, psi, center);
  return antiderivative(b) - antiderivative(a);
}

namespace {

void check_q(const Rational& q) {
  if (q <= 0 || q >= 1) throw Error(ErrorKind::QOutOfRange, "q = " + to_string(q) + " outside (0, 1)");
}

Rational jackson_closed_form(const RationalPolynomial& p, const Rational& q, const Rational& z) {
  Rational sum = 0;
  for (int n = 0; n <= p.degree(); ++n) sum += p[n] * pow(z, n + 1) * (1 - q) / (1 - pow(q, n + 1));
  return sum;
}

struct Partial {
  double value = 0;
  double bound = 0;
};

// Geometric tail of the series after K terms, summed monomialwise in absolute value.
double tail_after(const Polynomial<double>& p, double q, double z, int terms) {
  double tail = 0;
  for (int n = 0; n <= p.degree(); ++n) {
    const double qn1 = std::pow(q, n + 1);
    tail += std::abs(p[n] * std::pow(z, n + 1)) * (1 - q) * std::pow(qn1, terms) / (1 - qn1);
  }
  return tail;
}

Partial jackson_partial(const Polynomial<double>& p, double q, double z, int terms) {
  Partial out;
  if (z == 0 || p.is_zero()) return out;
  Polynomial<double> abs_p;
  {
    std::vector<double> c;
    for (double v : p.coeffs()) c.push_back(std::abs(v));
    abs_p = Polynomial<double>(std::move(c));
  }
  // Kahan-compensated sum of q^k p(q^k z).
  double sum = 0, carry = 0, magnitude = 0;
  double node = z, weight = 1;
  for (int k = 0; k < terms; ++k) {
    const double term = weight * p(node);
    magnitude += weight * abs_p(std::abs(node));
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    node *= q;
    weight *= q;
  }
  const double scale = (1 - q) * z;
  out.value = scale * sum;
  // Horner evaluation and the running products contribute O((deg + k) u)
  // relative error per term; bound it generously by (deg + 8 + terms) u.
  const double u = std::numeric_limits<double>::epsilon();
  const double rounding = std::abs(scale) * magnitude * (p.degree() + 8.0) * u * 4 +
                          std::abs(out.value) * u * 4;
  out.bound = tail_after(p, q, z, terms) + rounding;
  return out;
}

int terms_for(const Polynomial<double>& p, double q, double z, double tolerance) {
  if (z == 0 || p.is_zero()) return 0;
  int terms = 1;
  while (tail_after(p, q, z, terms) > tolerance) {
    terms *= 2;
    if (terms > (1 << 26)) throw Error(ErrorKind::InvalidArgument, "Jackson tolerance unreachable");
  }
  int lo = terms / 2, hi = terms;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (tail_after(p, q, z, mid) > tolerance ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

QuadratureResult jackson_symbolic(const RationalPolynomial& p, const Rational& q, const Rational& from,
                                  const Rational& to) {
  check_q(q);
  QuadratureResult r;
  r.mode = QuadratureResult::Mode::Symbolic;
  r.exact = jackson_closed_form(p, q, to) - jackson_closed_form(p, q, from);
  r.value = to_double(r.exact);
  return r;
}

QuadratureResult jackson_numeric(const RationalPolynomial& p, const Rational& q, const Rational& from,
                                 const Rational& to, const JacksonStop& stop) {
  check_q(q);
  if (!stop.tolerance && !stop.terms)
    throw Error(ErrorKind::InvalidArgument, "Jackson numeric mode needs a tolerance or a term count");
  const Polynomial<double> pd = p.cast<double>();
  const double qd = to_double(q);
  const double a = to_double(from);
  const double b = to_double(to);
  int terms_a = 0, terms_b = 0;
  if (stop.terms) {
    terms_a = terms_b = *stop.terms;
  } else {
    // Split the tolerance between the two endpoint series, leaving room for rounding.
    const double share = *stop.tolerance / (from == 0 ? 1.0 : 2.0) * 0.5;
    terms_b = terms_for(pd, qd, b, share);
    terms_a = terms_for(pd, qd, a, share);
  }
  const Partial upper = jackson_partial(pd, qd, b, terms_b);
  const Partial lower = jackson_partial(pd, qd, a, terms_a);
  QuadratureResult r;
  r.mode = QuadratureResult::Mode::Numeric;
  r.value = upper.value - lower.value;
  r.terms_used = terms_a + terms_b;
  r.tail_bound = upper.bound + lower.bound;
  return r;
}

RationalPolynomial cauchy_kernel_integral(const RationalPolynomial& f, int k, const Rational& base) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "kernel order must be >= 1");
  // (x - t)^{k-1} = sum_j C(k-1, j) x^{k-1-j} (-t)^j.
  RationalPolynomial out;
  for (int j = 0; j <= k - 1; ++j) {
    const Rational c = binomial(k - 1, j) * pow(Rational(-1), j) / factorial(k - 1);
    const RationalPolynomial antiderivative = (RationalPolynomial::monomial(j) * f).antiderivative();
    const RationalPolynomial definite = antiderivative - RationalPolynomial::constant(antiderivative(base));
    out += RationalPolynomial::monomial(k - 1 - j, c) * definite;
  }
  return out;
}

namespace {

Rational summation_kernel_at(const std::function<Rational(std::int64_t)>& f, int k, std::int64_t base,
                             std::int64_t x) {
  Rational sum = 0;
  const Rational norm = factorial(k - 1);
  for (std::int64_t r = base; r <= x - 1; ++r) {
    const Rational weight = falling_power(Rational(x - r - 1), k - 1);
    if (weight != 0) sum += weight / norm * f(r);
  }
  return sum;
}

// Newton forward interpolation through (base + i, values[i]).
RationalPolynomial interpolate_forward(const std::vector<Rational>& values, const Rational& base) {
  std::vector<Rational> diffs = values;
  RationalPolynomial out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    out += falling_power_poly(static_cast<int>(j)) * (diffs[0] / factorial(static_cast<int>(j)));
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return out.shifted(-base);
}

std::int64_t integer_base(const Rational& base) {
  if (!is_integer(base)) throw Error(ErrorKind::NonIntegerGridArg, "summation base " + to_string(base));
  return to_int64(base);
}

}  // namespace

RationalPolynomial cauchy_kernel_summation(const RationalPolynomial& f, int k, const Rational& base) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "kernel order must be >= 1");
  const std::int64_t b = integer_base(base);
  const int degree = std::max(f.degree(), 0) + k;
  std::vector<Rational> values;
  for (std::int64_t x = b; x <= b + degree; ++x)
    values.push_back(summation_kernel_at([&](std::int64_t r) { return f(Rational(r)); }, k, b, x));
  return interpolate_forward(values, base);
}

GridFunction cauchy_kernel_summation(const GridFunction& f, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "kernel order must be >= 1");
  if (f.first() != 0) throw Error(ErrorKind::GridDomainTooSmall, "summation kernel needs a grid starting at 0");
  std::vector<Rational> values;
  for (std::int64_t x = 0; x <= f.last() + k; ++x)
    values.push_back(summation_kernel_at([&](std::int64_t r) { return f.at(r); }, k, 0, x));
  return GridFunction(std::move(values));
}

RationalPolynomial iterated_integral(const RationalPolynomial& f, int k, const Rational& base) {
  RationalPolynomial out = f;
  for (int i = 0; i < k; ++i) {
    const RationalPolynomial a = out.antiderivative();
    out = a - RationalPolynomial::constant(a(base));
  }
  return out;
}

RationalPolynomial iterated_summation(const RationalPolynomial& f, int k, const Rational& base) {
  const std::int64_t b = integer_base(base);
  RationalPolynomial out = f;
  for (int i = 0; i < k; ++i) {
    // sum_{r=b}^{x-1} out(r), interpolated through its values at b..b+deg+1.
    std::vector<Rational> values{Rational(0)};
    for (int j = 0; j <= std::max(out.degree(), 0); ++j)
      values.push_back(values.back() + out(Rational(b + j)));
    out = interpolate_forward(values, base);
  }
  return out;
}

GridFunction iterated_summation(const GridFunction& f, int k) {
  GridFunction out = f;
  for (int i = 0; i < k; ++i) out = summation(out, 0);
  return out;
}

PerPartesResult per_partes(const RationalPolynomial& f, const RationalPolynomial& g, const PsiSequence& psi,
                           const Rational& a, const Rational& b) {
  const int cap = std::max(f.degree(), 0) + std::max(g.degree(), 0) + 1;
  PerPartesResult r;
  r.lhs = psi_integrate(star(f, psi_lower(g, psi), psi, cap), psi, a, b);
  const RationalPolynomial product = star(f, g, psi, cap);
  r.rhs = product(b) - product(a) - psi_integrate(star(f.derivative(), g, psi, cap), psi, a, b);
  r.pass = r.lhs == r.rhs;
  return r;
}

}  // namespace umbral
