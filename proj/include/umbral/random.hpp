#pragma once

#include <cstdint>
#include <random>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

using Rng = std::mt19937_64;

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
inline Rational random_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline std::int64_t random_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Polynomial of degree exactly `degree` (nonzero leading coefficient).
inline RationalPolynomial random_polynomial(Rng& rng, int degree, int bound = 9) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, bound));
  while (degree >= 0 && c.back() == 0) c.back() = random_rational(rng, bound);
  return RationalPolynomial(std::move(c));
}

}  // namespace umbral
