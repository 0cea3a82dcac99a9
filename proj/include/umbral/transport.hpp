#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "umbral/linear_operator.hpp"
#include "umbral/psi_sequence.hpp"
#include "umbral/verdict.hpp"

namespace umbral {

/// Polynomials q_0, ..., q_N with deg q_n = n, together with the exact
/// change-of-basis matrices. to_monomial() has q_n's coefficients in column n;
/// both matrices are upper triangular and mutually inverse.
class GradedBasis {
 public:
  /// Throws SingularBasis unless deg elements[n] == n for every n.
  GradedBasis(std::vector<RationalPolynomial> elements, std::string label);

  static GradedBasis monomial(int max_degree);
  static GradedBasis falling_power(int max_degree);
  /// q_n = (x - center)^n.
  static GradedBasis shifted(const Rational& center, int max_degree);
  /// One polynomial per non-comment line, in the CLI expression grammar.
  static GradedBasis from_file(const std::filesystem::path& path);
  /// "monomial", "falling", "shifted:C" or "file:PATH".
  static GradedBasis from_spec(const std::string& spec, int max_degree);

  int max_degree() const { return static_cast<int>(elements_.size()) - 1; }
  const RationalPolynomial& element(int n) const { return elements_.at(static_cast<std::size_t>(n)); }
  const std::string& label() const { return label_; }
  const RationalMatrix& to_monomial() const { return to_monomial_; }
  const RationalMatrix& from_monomial() const { return from_monomial_; }

  /// Turns a map given in basis coordinates (column n = image of q_n in the
  /// q-basis) into the same map on monomial coordinates.
  RationalOperator transport(const RationalMatrix& coordinate_action, int shift, std::string name) const;

 private:
  std::vector<RationalPolynomial> elements_;
  std::string label_;
  RationalMatrix to_monomial_;
  RationalMatrix from_monomial_;
};

enum class TransportConvention {
  /// Q q_n = n_psi q_{n-1}; keeps [Q, x_Q] = 1.
  PsiGraded,
  /// Q q_n = n q_{n-1}, the ungraded rule; breaks [Q, x_Q] = 1 unless psi is classical.
  Printed,
};

/// The psi-calculus carried over to a graded basis:
///   Q q_n = n_psi q_{n-1},  x_Q q_n = (n+1)/(n+1)_psi q_{n+1},  int_Q q_n = q_{n+1}/(n+1)_psi.
/// Q has cap N; the raising maps have cap N-1 so that their images stay in the basis.
struct TransportedCalculus {
  GradedBasis basis;
  PsiSequence psi;
  TransportConvention convention;
  RationalOperator lowering;
  RationalOperator raising;
  RationalOperator integral;

  /// f *_Q g = f(x_Q) g.
  RationalPolynomial star(const RationalPolynomial& f, const RationalPolynomial& g) const;
};

TransportedCalculus transport_calculus(const GradedBasis& basis, const PsiSequence& psi,
                                       TransportConvention convention = TransportConvention::PsiGraded);

/// Suites: "ghw", "bernoulli" (orders 0..order), "star-law", "integration".
/// Throws UnknownIdentity for any other name.
Verdict verify_transported(const TransportedCalculus& calculus, const std::string& suite, int max_degree,
                           int order = 4, int cases = 50);

}  // namespace umbral
