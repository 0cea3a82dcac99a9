#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "umbral/polynomial.hpp"
#include "umbral/psi_sequence.hpp"
#include "umbral/verdict.hpp"

namespace umbral {

/// x^n -> (n+1)/(n+1)_psi x^{n+1}, applied coefficientwise.
RationalPolynomial psi_raise(const RationalPolynomial& g, const PsiSequence& psi);
/// x^n -> n_psi x^{n-1}.
RationalPolynomial psi_lower(const RationalPolynomial& g, const PsiSequence& psi);

/// f(R) g = sum_i f_i R^i g for an arbitrary raising map R.
RationalPolynomial substitute_raising(const RationalPolynomial& f, const RationalPolynomial& g,
                                      const std::function<RationalPolynomial(const RationalPolynomial&)>& raise);

/// The psi-product f *_psi g = f(x_psi) g. Bilinear, neither commutative nor
/// associative. Constants on the left act as scalars; on the right they are
/// raised like any polynomial, so x *_psi 1 = x / 1_psi.
/// Throws CapExceeded when deg f + deg g > cap.
RationalPolynomial star(const RationalPolynomial& f, const RationalPolynomial& g, const PsiSequence& psi,
                        int cap = PsiSequence::kDefaultCap);

/// x^{n *_psi} = x *_psi (x *_psi ... 1) = (n!/n_psi!) x^n.
RationalPolynomial star_power(int n, const PsiSequence& psi);
/// Right-nested x *_psi (x *_psi (... *_psi g)), i.e. x_psi^n g.
RationalPolynomial star_power(int n, const PsiSequence& psi, const RationalPolynomial& operand);

/// Classical truncated exponential sum_{n<=N} alpha^n x^n / n!.
RationalPolynomial exp_classical(const Rational& alpha, int truncation);

/// Truncated series bound to the psi context it was built under.
class StarSeries {
 public:
  StarSeries(RationalPolynomial poly, PsiSequence psi, int truncation);

  const RationalPolynomial& polynomial() const { return poly_; }
  const PsiSequence& psi() const { return psi_; }
  int truncation() const { return truncation_; }

  /// *_psi product truncated at the smaller truncation. Throws MixedPsiContext
  /// if the operands were built under different sequences.
  friend StarSeries star(const StarSeries& f, const StarSeries& g);
  /// Left factor given as an ordinary polynomial (e.g. a classical exponential).
  friend StarSeries star(const RationalPolynomial& f, const StarSeries& g);

 private:
  RationalPolynomial poly_;
  PsiSequence psi_;
  int truncation_;
};

/// exp_psi[alpha x] = exp{alpha x_psi} 1 = sum_{n<=N} alpha^n x^n / n_psi!.
StarSeries exp_psi(const Rational& alpha, const PsiSequence& psi, int truncation);

struct StarAxiomParams {
  PsiSequence psi = PsiSequence::classical();
  Rational alpha = 1;
  Rational beta = 1;
  int cases = 100;
  std::uint64_t seed = 2024;
};

/// Axiom registry: "obs-a", "obs-c", "obs-d", "leibniz" (alias "obs-e"),
/// "obs-f", "star-power-law", "non-associativity". Throws UnknownAxiom.
Verdict verify_star_axiom(const std::string& axiom, const StarAxiomParams& params, int truncation);

}  // namespace umbral
