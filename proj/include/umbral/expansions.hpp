#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbral/grid_function.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/psi_sequence.hpp"

namespace umbral {

/// One Bernoulli-Taylor run: target = sum(terms) + remainder exactly, so
/// residual = target - reconstruction must be 0.
struct ExpansionReport {
  std::string engine;
  Rational alpha = 0;
  Rational point = 0;
  int order = 0;
  /// terms[k] for k = 0..order.
  std::vector<Rational> terms;
  Rational remainder = 0;
  Rational reconstruction = 0;
  /// The quantity being expanded, described by target_label.
  Rational target = 0;
  std::string target_label;
  Rational residual = 0;

  // psi engine only.
  Rational center = 0;
  std::string psi_label;
  /// The same terms evaluated at the point instead of alpha.
  std::vector<Rational> terms_at_point;
};

/// f(point) = sum_k (point-alpha)^k f^(k)(alpha)/k!
///            + int_alpha^point (point-t)^n/n! f^(n+1)(t) dt.
ExpansionReport classical_bt(const RationalPolynomial& f, const Rational& alpha, const Rational& point, int order);

/// f(x) = sum_k x^(k falling)/k! (Delta^k f)(0)
///        + sum_{r=0}^{x-1} (x-r-1)^(n falling)/n! (Delta^{n+1} f)(r).
/// Terms with a vanishing falling-power weight are skipped, so a grid on 0..x
/// suffices; otherwise GridDomainTooSmall.
ExpansionReport delta_bt(const RationalPolynomial& f, std::int64_t point, int order);
ExpansionReport delta_bt(const GridFunction& f, std::int64_t point, int order);

/// Backward-difference expansion at the origin with the sign convention
///   terms_k   = alpha^(k falling)/k! (-1)^{k+1} (Nabla^k f)(alpha)
///   remainder = (-1)^n sum_{r=0}^{alpha-1} r^(n falling)/n! (Nabla^{n+1} f)(r+1).
/// With these signs the terms and remainder add up to -f(0), which is the
/// report target. Requires alpha >= 1.
ExpansionReport maclaurin_bt(const RationalPolynomial& f, std::int64_t alpha, int order);
ExpansionReport maclaurin_bt(const GridFunction& f, std::int64_t alpha, int order);

/// psi Bernoulli-Taylor formula from the Bernoulli identity with p = d_psi and
/// q = z_psi, both acting on powers of (x - center). With
///   T_k = (-1)^k/k! z_psi^k d_psi^k f   and   G = sum_{k<=n} T_k
/// one has d_psi G = (-1)^n/n! z_psi^n d_psi^{n+1} f, and psi-integration from
/// alpha to point gives
///   G(point) = sum_k T_k(alpha) + (-1)^n/n! int_alpha^point [z_psi^n d_psi^{n+1} f] d_psi t.
/// The report's target is G(point); choosing center = point makes it f(point),
/// and for classical psi the terms then coincide with classical_bt.
ExpansionReport psi_bt(const RationalPolynomial& f, const Rational& alpha, const Rational& point, int order,
                       const PsiSequence& psi, const Rational& center = 0);

/// sum_k (1/k!) (x-alpha)^{k *psi} *_psi f^(k)(alpha) with (x-alpha)^{k *psi}
/// taken as the polynomial (k!/k_psi!)(x-alpha)^k and f^(k) = d_psi^k f. For
/// f = x^2, alpha = 0, n = 2 this is (2/2_psi) x^2 rather than x^2; kept as a
/// regression check against that reading of the psi formula.
RationalPolynomial literal_star_taylor_sum(const RationalPolynomial& f, const Rational& alpha, int order,
                                           const PsiSequence& psi);

}  // namespace umbral
