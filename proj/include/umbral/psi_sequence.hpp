#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// The sequence n -> n_psi that deforms the integers. n_psi must be nonzero
/// for every n >= 1; 0_psi is taken to be 0 so that the psi-derivative kills
/// constants.
///
/// The q-deformed sequence is n_q = 1 + q + ... + q^{n-1}. It is the only
/// choice for which the psi-derivative agrees with the Jackson q-derivative
/// written as (1 - q Q)/(1 - q) composed with the divided difference, where
/// (Q f)(x) = f(qx): on x^n that operator gives (1 - q^n)/(1 - q) x^{n-1}.
///
/// Values up to the validation cap are computed once at construction, so a
/// sequence is immutable and safe to share between threads.
class PsiSequence {
 public:
  enum class Kind { Classical, QDeformed, Custom };

  static constexpr int kDefaultCap = 64;

  static PsiSequence classical(int cap = kDefaultCap);
  /// Throws InvalidQ for q = 1 and ZeroPsiValue(n) for the first n <= cap
  /// with n_q = 0 (q = -1 fails at n = 2).
  static PsiSequence q_deformed(const Rational& q, int cap = kDefaultCap);
  /// Finite table: values[0] is 1_psi, values[n-1] is n_psi. Queries past the
  /// table throw OutOfRange.
  static PsiSequence custom(std::vector<Rational> values, std::string label = "custom");
  /// Generator rule evaluated and validated for n = 1..cap.
  static PsiSequence custom(const std::function<Rational(int)>& rule, int cap, std::string label);
  /// One rational per data line; '#' starts a comment; blank lines ignored.
  static PsiSequence from_file(const std::filesystem::path& path);
  static PsiSequence parse_table(std::string_view text, std::string label);
  /// "classical", "q:P/Q" or "file:PATH".
  static PsiSequence from_spec(std::string_view spec, int cap = kDefaultCap);

  Kind kind() const { return kind_; }
  /// Defined for QDeformed only.
  const Rational& q() const { return q_; }
  const std::string& label() const { return label_; }
  /// Largest n that can be queried.
  int range() const;

  /// n_psi for n >= 0.
  Rational value(int n) const;
  /// n_psi! = 1_psi 2_psi ... n_psi; 0_psi! = 1.
  Rational factorial(int n) const;
  /// n! / n_psi!, the coefficient of x^n in the n-th star power of x.
  Rational star_coefficient(int n) const;
  /// True when 1_psi = 1, the case where the scalar rules for the star
  /// product agree with treating constants as scalars.
  bool unit_is_one() const { return value(1) == 1; }

  friend bool operator==(const PsiSequence& a, const PsiSequence& b);

 private:
  PsiSequence(Kind kind, Rational q, std::vector<Rational> table, bool extendable, std::string label);
  Rational compute(int n) const;

  Kind kind_;
  Rational q_;
  // table_[n-1] = n_psi, fact_[n] = n_psi!
  std::shared_ptr<const std::vector<Rational>> table_;
  std::shared_ptr<const std::vector<Rational>> fact_;
  bool extendable_;
  std::string label_;
};

}  // namespace umbral
