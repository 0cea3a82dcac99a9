#pragma once

#include <cstdint>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Exact values on the integer range first()..last().
class GridFunction {
 public:
  /// values[i] is the value at first + i. Requires at least one value.
  explicit GridFunction(std::vector<Rational> values, std::int64_t first = 0);

  /// Samples p at first..last.
  static GridFunction sample(const RationalPolynomial& p, std::int64_t first, std::int64_t last);

  std::int64_t first() const { return first_; }
  std::int64_t last() const { return first_ + static_cast<std::int64_t>(values_.size()) - 1; }
  bool contains(std::int64_t x) const { return x >= first() && x <= last(); }
  const std::vector<Rational>& values() const { return values_; }

  /// Throws GridDomainTooSmall outside first()..last().
  const Rational& at(std::int64_t x) const;

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    return a.first_ == b.first_ && a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::int64_t first_;
};

/// Forward difference; domain shrinks to first..last-1.
GridFunction forward_difference(const GridFunction& f);
/// Backward difference (1 - E^{-1}); domain shrinks to first+1..last.
GridFunction backward_difference(const GridFunction& f);
/// (E^a f)(x) = f(x + a); domain moves to first-a..last-a.
GridFunction shift(const GridFunction& f, std::int64_t a);
/// (a f)(x) = sum_{k=base}^{x-1} f(k) on base..last+1. Requires first <= base <= last.
GridFunction summation(const GridFunction& f, std::int64_t base = 0);
/// (x f)(x) = x f(x).
GridFunction multiply_by_x(const GridFunction& f);

}  // namespace umbral
