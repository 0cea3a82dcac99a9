#include "umbral/star_product.hpp"

#include <utility>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/linear_operator.hpp"
#include "umbral/operators.hpp"
#include "umbral/random.hpp"

namespace umbral {

RationalPolynomial psi_raise(const RationalPolynomial& g, const PsiSequence& psi) {
  if (g.is_zero()) return {};
  std::vector<Rational> c(g.coeffs().size() + 1, Rational(0));
  for (int n = 0; n <= g.degree(); ++n) c[n + 1] = g[n] * (n + 1) / psi.value(n + 1);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial psi_lower(const RationalPolynomial& g, const PsiSequence& psi) {
  if (g.degree() < 1) return {};
  std::vector<Rational> c(g.coeffs().size() - 1);
  for (int n = 1; n <= g.degree(); ++n) c[n - 1] = g[n] * psi.value(n);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial substitute_raising(const RationalPolynomial& f, const RationalPolynomial& g,
                                      const std::function<RationalPolynomial(const RationalPolynomial&)>& raise) {
  RationalPolynomial out;
  RationalPolynomial raised = g;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i > 0) raised = raise(raised);
    out += f[i] * raised;
  }
  return out;
}

RationalPolynomial star(const RationalPolynomial& f, const RationalPolynomial& g, const PsiSequence& psi,
                        int cap) {
  if (std::max(f.degree(), 0) + std::max(g.degree(), 0) > cap)
    throw Error(ErrorKind::CapExceeded, "star product degree " + std::to_string(f.degree() + g.degree()) +
                                            " exceeds cap " + std::to_string(cap));
  return substitute_raising(f, g, [&](const RationalPolynomial& p) { return psi_raise(p, psi); });
}

RationalPolynomial star_power(int n, const PsiSequence& psi) {
  return RationalPolynomial::monomial(n, psi.star_coefficient(n));
}

RationalPolynomial star_power(int n, const PsiSequence& psi, const RationalPolynomial& operand) {
  RationalPolynomial out = operand;
  for (int i = 0; i < n; ++i) out = psi_raise(out, psi);
  return out;
}

RationalPolynomial exp_classical(const Rational& alpha, int truncation) {
  std::vector<Rational> c;
  for (int n = 0; n <= truncation; ++n) c.push_back(pow(alpha, n) / factorial(n));
  return RationalPolynomial(std::move(c));
}

namespace {

RationalPolynomial truncate(const RationalPolynomial& p, int degree) {
  if (p.degree() <= degree) return p;
  return RationalPolynomial(std::vector<Rational>(p.coeffs().begin(), p.coeffs().begin() + degree + 1));
}

}  // namespace

StarSeries::StarSeries(RationalPolynomial poly, PsiSequence psi, int truncation)
    : poly_(truncate(poly, truncation)), psi_(std::move(psi)), truncation_(truncation) {}

StarSeries star(const StarSeries& f, const StarSeries& g) {
  if (!(f.psi_ == g.psi_))
    throw Error(ErrorKind::MixedPsiContext, f.psi_.label() + " vs " + g.psi_.label());
  return star(f.poly_, g);
}

StarSeries star(const RationalPolynomial& f, const StarSeries& g) {
  const int n = g.truncation_;
  // Terms of f above the truncation only produce degrees above it.
  const RationalPolynomial product =
      star(truncate(f, n), g.poly_, g.psi_, std::max(f.degree(), 0) + std::max(g.poly_.degree(), 0));
  return StarSeries(product, g.psi_, n);
}

StarSeries exp_psi(const Rational& alpha, const PsiSequence& psi, int truncation) {
  std::vector<Rational> c;
  for (int n = 0; n <= truncation; ++n) c.push_back(pow(alpha, n) / psi.factorial(n));
  return StarSeries(RationalPolynomial(std::move(c)), psi, truncation);
}

namespace {

using Poly = RationalPolynomial;

Verdict obs_a(const StarAxiomParams& p, int n_max) {
  Verdict v{"obs-a"};
  for (int n = 0; n <= n_max; ++n) {
    const Poly lhs = psi_lower(star_power(n, p.psi), p.psi);
    const Poly rhs = n == 0 ? Poly{} : Rational(n) * star_power(n - 1, p.psi);
    if (!record_case(v, Poly::monomial(n), lhs, rhs, n)) break;
  }
  return v;
}

Verdict obs_c(const StarAxiomParams& p, int truncation, Rng& rng) {
  Verdict v{"obs-c"};
  auto check = [&](const Rational& a, const Rational& b) {
    const StarSeries lhs = star(exp_classical(a, truncation), exp_psi(b, p.psi, truncation));
    const StarSeries rhs = exp_psi(a + b, p.psi, truncation);
    return record_case(v, Poly{a, b}, lhs.polynomial(), rhs.polynomial());
  };
  if (!check(p.alpha, p.beta)) return v;
  for (int i = 0; i < p.cases; ++i)
    if (!check(random_rational(rng, 20), random_rational(rng, 20))) break;
  return v;
}

// Leibniz rule: d_psi(f * g) = (Df) * g + f * (d_psi g), D the ordinary derivative.
bool leibniz_case(Verdict& v, const PsiSequence& psi, const Poly& f, const Poly& g) {
  const int cap = std::max(f.degree(), 0) + std::max(g.degree(), 0);
  const Poly lhs = psi_lower(star(f, g, psi, cap), psi);
  const Poly rhs = star(f.derivative(), g, psi, cap) + star(f, psi_lower(g, psi), psi, cap);
  return record_case(v, f, lhs, rhs);
}

Verdict leibniz(const StarAxiomParams& p, int max_degree, Rng& rng) {
  Verdict v{"leibniz"};
  if (!leibniz_case(v, p.psi, Poly::monomial(1), Poly::monomial(1))) return v;
  for (int i = 0; i < p.cases; ++i) {
    const Poly f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, max_degree)));
    const Poly g = random_polynomial(rng, static_cast<int>(random_int(rng, 0, max_degree)));
    if (!leibniz_case(v, p.psi, f, g)) break;
  }
  return v;
}

// The Leibniz rule on x^k against the star powers x^{n*}.
Verdict obs_d(const StarAxiomParams& p, int max_degree) {
  Verdict v{"obs-d"};
  for (int k = 0; k <= max_degree; ++k)
    for (int n = 0; n + k <= max_degree; ++n)
      if (!leibniz_case(v, p.psi, Poly::monomial(k), star_power(n, p.psi))) return v;
  return v;
}

// f(x_psi) g(x_psi) 1 = f *_psi (g(x_psi) 1), the left side built as an
// operator product and the right side by substitution.
Verdict obs_f(const StarAxiomParams& p, int max_degree, Rng& rng) {
  Verdict v{"obs-f"};
  const int half = std::max(max_degree / 2, 1);
  const RationalOperator raise = ops::psi_multiply(p.psi, 2 * half);
  std::vector<RationalOperator> powers{RationalOperator::identity(2 * half)};
  for (int k = 1; k <= half; ++k) powers.push_back(compose(raise, powers.back()));
  auto at_raise = [&](const Poly& h) {
    RationalOperator out = scale(h[0], powers[0]);
    for (int k = 1; k <= h.degree(); ++k) out = add(out, powers[static_cast<std::size_t>(k)], h[k]);
    return out;
  };
  for (int i = 0; i < p.cases; ++i) {
    const Poly f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, half)));
    const Poly g = random_polynomial(rng, static_cast<int>(random_int(rng, 0, half)));
    const RationalOperator product = compose(at_raise(f), at_raise(g));
    const Poly lhs = product.apply(Poly::constant(1));
    const Poly g_tilde = star(g, Poly::constant(1), p.psi);
    const Poly rhs = star(f, g_tilde, p.psi);
    if (!record_case(v, f, lhs, rhs)) break;
  }
  return v;
}

// x^{n*} *_psi x^{k*} = (n!/n_psi!) x^{(n+k)*}, and the swapped product
// carries k!/k_psi! instead.
Verdict star_power_law(const StarAxiomParams& p, int max_degree) {
  Verdict v{"star-power-law"};
  for (int n = 0; n <= max_degree; ++n)
    for (int k = 0; n + k <= max_degree; ++k) {
      const Poly lhs = star(star_power(n, p.psi), star_power(k, p.psi), p.psi);
      const Poly rhs = p.psi.star_coefficient(n) * star_power(n + k, p.psi);
      if (!record_case(v, Poly::monomial(n), lhs, rhs, n)) return v;
      const Poly swapped = star(star_power(k, p.psi), star_power(n, p.psi), p.psi);
      const Poly swapped_rhs = p.psi.star_coefficient(k) * star_power(n + k, p.psi);
      if (!record_case(v, Poly::monomial(k), swapped, swapped_rhs, k)) return v;
    }
  return v;
}

// Passes when (x * x) * x differs from x * (x * x): the product must not be
// silently associative. Fails for the classical sequence, where it is.
Verdict non_associativity(const StarAxiomParams& p) {
  Verdict v{"non-associativity"};
  const Poly x = Poly::monomial(1);
  const Poly left = star(star(x, x, p.psi), x, p.psi);
  const Poly right = star(x, star(x, x, p.psi), p.psi);
  v.cases = 1;
  if (left == right) {
    v.pass = false;
    v.counterexample = Counterexample{x, left, right, 1};
  }
  v.note = "(x*x)*x = " + to_string(left[3]) + " x^3, x*(x*x) = " + to_string(right[3]) + " x^3";
  return v;
}

}  // namespace

Verdict verify_star_axiom(const std::string& axiom, const StarAxiomParams& params, int truncation) {
  Rng rng(params.seed);
  if (axiom == "obs-a") return obs_a(params, truncation);
  if (axiom == "obs-c") return obs_c(params, truncation, rng);
  if (axiom == "obs-d") return obs_d(params, truncation);
  if (axiom == "leibniz" || axiom == "obs-e") {
    Verdict v = leibniz(params, truncation, rng);
    v.id = axiom;
    return v;
  }
  if (axiom == "obs-f") return obs_f(params, truncation, rng);
  if (axiom == "star-power-law") return star_power_law(params, truncation);
  if (axiom == "non-associativity") return non_associativity(params);
  throw Error(ErrorKind::UnknownAxiom, "no star axiom named '" + axiom + "'");
}

}  // namespace umbral
