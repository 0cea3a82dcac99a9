#include "umbral/grid_function.hpp"

#include <string>
#include <utility>

#include "umbral/error.hpp"

namespace umbral {

GridFunction::GridFunction(std::vector<Rational> values, std::int64_t first)
    : values_(std::move(values)), first_(first) {
  if (values_.empty()) throw Error(ErrorKind::GridDomainTooSmall, "grid function needs at least one value");
}

GridFunction GridFunction::sample(const RationalPolynomial& p, std::int64_t first, std::int64_t last) {
  std::vector<Rational> v;
  for (std::int64_t x = first; x <= last; ++x) v.push_back(p(Rational(x)));
  return GridFunction(std::move(v), first);
}

const Rational& GridFunction::at(std::int64_t x) const {
  if (!contains(x))
    throw Error(ErrorKind::GridDomainTooSmall, "grid point " + std::to_string(x) + " outside [" +
                                                   std::to_string(first()) + ", " +
                                                   std::to_string(last()) + "]");
  return values_[static_cast<std::size_t>(x - first_)];
}

GridFunction forward_difference(const GridFunction& f) {
  if (f.values().size() < 2) throw Error(ErrorKind::GridDomainTooSmall, "difference of a one-point grid");
  std::vector<Rational> v;
  for (std::size_t i = 0; i + 1 < f.values().size(); ++i) v.push_back(f.values()[i + 1] - f.values()[i]);
  return GridFunction(std::move(v), f.first());
}

GridFunction backward_difference(const GridFunction& f) {
  if (f.values().size() < 2) throw Error(ErrorKind::GridDomainTooSmall, "difference of a one-point grid");
  std::vector<Rational> v;
  for (std::size_t i = 0; i + 1 < f.values().size(); ++i) v.push_back(f.values()[i + 1] - f.values()[i]);
  return GridFunction(std::move(v), f.first() + 1);
}

GridFunction shift(const GridFunction& f, std::int64_t a) { return GridFunction(f.values(), f.first() - a); }

GridFunction summation(const GridFunction& f, std::int64_t base) {
  if (!f.contains(base))
    throw Error(ErrorKind::GridDomainTooSmall, "summation base " + std::to_string(base) + " outside grid");
  std::vector<Rational> v{Rational(0)};
  for (std::int64_t k = base; k <= f.last(); ++k) v.push_back(v.back() + f.at(k));
  return GridFunction(std::move(v), base);
}

GridFunction multiply_by_x(const GridFunction& f) {
  std::vector<Rational> v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= f.first() + static_cast<std::int64_t>(i);
  return GridFunction(std::move(v), f.first());
}

}  // namespace umbral
