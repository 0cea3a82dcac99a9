#pragma once

#include <optional>
#include <string>
#include <utility>

#include "umbral/linear_operator.hpp"
#include "umbral/polynomial.hpp"

namespace umbral {

/// First input on which the two sides of an identity disagree.
struct Counterexample {
  RationalPolynomial input;
  RationalPolynomial lhs;
  RationalPolynomial rhs;
  /// Degree of the monomial input, or -1 when the input is not a basis element.
  int degree = -1;
};

struct Verdict {
  Verdict() = default;
  explicit Verdict(std::string id_) : id(std::move(id_)) {}

  std::string id;
  bool pass = true;
  int cases = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

/// Checks lhs(x^m) == rhs(x^m) for m = 0..max_degree, stopping at the first
/// mismatch. Throws CapExceeded if either side is not defined up to max_degree.
Verdict compare_on_basis(const std::string& id, const RationalOperator& lhs, const RationalOperator& rhs,
                         int max_degree);

/// Records one comparison into a running verdict; returns false on the first
/// mismatch.
bool record_case(Verdict& verdict, const RationalPolynomial& input, const RationalPolynomial& lhs,
                 const RationalPolynomial& rhs, int degree = -1);

/// Folds a sub-verdict into an aggregate, keeping the first counterexample.
void absorb(Verdict& total, const Verdict& part);

}  // namespace umbral
