#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbral/linear_operator.hpp"
#include "umbral/psi_sequence.hpp"
#include "umbral/verdict.hpp"

namespace umbral {

/// Concrete realizations of the pair p, q with [p, q] = 1.
enum class Representation {
  /// p = D, q = x - y.
  Classical,
  /// p = forward difference, q = x ∘ E^{-1}.
  Delta,
  /// p = d_psi, q = z_psi, both on powers of (x - center).
  Psi,
  /// Classical psi transported to the falling-power basis.
  FallingPower,
  /// d_psi around 0 with z_psi around center: not a GHW pair when center != 0.
  Mixed,
};

Representation parse_representation(const std::string& name);
std::string to_string(Representation rep);

struct OperatorPair {
  RationalOperator lowering;
  RationalOperator raising;
  std::string label;
  /// False for the mixed-basis pair, whose commutator is not the identity.
  bool ghw = true;
};

/// Builds the pair on polynomials of degree <= cap. `center` is y for the
/// classical pair and the expansion center for the psi pairs.
OperatorPair make_pair(Representation rep, const PsiSequence& psi, const Rational& center, int cap);

/// Both sides of the Bernoulli identity
///   p sum_{k<=n} (-q)^k p^k / k!  =  (-q)^n p^{n+1} / n!.
std::pair<RationalOperator, RationalOperator> bernoulli_sides(const RationalOperator& p, const RationalOperator& q,
                                                              int n);

/// Both sides of the telescoping identity
///   sum_{k<=n} a^k (1 - ab) b^k = 1 - a^{n+1} b^{n+1}.
std::pair<RationalOperator, RationalOperator> telescoping_sides(const RationalOperator& a, const RationalOperator& b,
                                                                int n);

/// Telescoping identity for a = summation, b = forward difference, checked on
/// every basis vector of the grid 0..grid_last (requires grid_last > n).
Verdict verify_telescoping_grid(int n, int grid_last);

/// Which (integration, differentiation) pair the telescoping and
/// one-minus-ab identities use.
enum class IntegrationPair { Integral, Summation };

struct IdentityParams {
  PsiSequence psi = PsiSequence::classical();
  Representation representation = Representation::Psi;
  IntegrationPair pair = IntegrationPair::Integral;
  /// y, the psi center, or the lower integration limit depending on the identity.
  Rational center = 0;
  Rational alpha = 0;
  /// Bernoulli and telescoping orders are checked for 0..order.
  int order = 6;
};

/// Registry ids: "telescoping", "one-minus-ab", "bernoulli-viskov", "ghw",
/// "jackson-rep", "psi-factorization", "hist-eps0", "hist-div-diff",
/// "hist-div-diff-printed". Each is checked exactly on x^m, m <= max_degree.
/// Throws UnknownIdentity.
Verdict verify_identity(const std::string& id, const IdentityParams& params, int max_degree);

const std::vector<std::string>& identity_ids();

}  // namespace umbral
