#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "umbral/error.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial in the monomial basis: coeffs()[i] multiplies
/// x^i. Canonical form has no trailing zero, so the zero polynomial is the
/// empty list and equality is structural.
template <typename Scalar>
class Polynomial {
 public:
  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial monomial(int degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// Coefficient vector, x^i at index i.
  static Polynomial from_vector(const Vector<Scalar>& v) {
    return Polynomial(std::vector<Scalar>(v.data(), v.data() + v.size()));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  Scalar operator[](int i) const {
    return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : Scalar(0);
  }

  /// Coefficient vector padded with zeros to `size` entries.
  Vector<Scalar> to_vector(int size) const {
    if (degree() >= size)
      throw Error(ErrorKind::CapExceeded, "polynomial of degree " + std::to_string(degree()) +
                                              " does not fit in " + std::to_string(size) +
                                              " coefficients");
    Vector<Scalar> v = Vector<Scalar>::Constant(size, Scalar(0));
    for (int i = 0; i <= degree(); ++i) v(i) = coeffs_[static_cast<std::size_t>(i)];
    return v;
  }

  Scalar operator()(const Scalar& x) const { return evaluate(x); }

  /// Horner evaluation.
  Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Scalar> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Scalar(static_cast<int>(i));
    return Polynomial(std::move(v));
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    if (is_zero()) return {};
    std::vector<Scalar> v(coeffs_.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / Scalar(static_cast<int>(i + 1));
    return Polynomial(std::move(v));
  }

  /// p(x + shift), by repeated synthetic division.
  Polynomial shifted(const Scalar& shift) const {
    std::vector<Scalar> c = coeffs_;
    const int n = degree();
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j)
        c[static_cast<std::size_t>(j)] += shift * c[static_cast<std::size_t>(j) + 1];
    return Polynomial(std::move(c));
  }

  template <typename To>
  Polynomial<To> cast() const {
    std::vector<To> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(static_cast<To>(c));
    return Polynomial<To>(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) { return p *= Scalar(-1); }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Scalar> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// The polynomial x.
template <typename Scalar = Rational>
Polynomial<Scalar> x_poly() {
  return Polynomial<Scalar>::monomial(1);
}

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, int exponent) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  for (int i = 0; i < exponent; ++i) out = out * p;
  return out;
}

/// Coefficients c with p(x) = sum_m c[m] (x - center)^m. Not trimmed: the list
/// has deg p + 1 entries (empty for the zero polynomial).
template <typename Scalar>
std::vector<Scalar> rebase(const Polynomial<Scalar>& p, const Scalar& center) {
  std::vector<Scalar> c = p.shifted(center).coeffs();
  c.resize(p.coeffs().size(), Scalar(0));
  return c;
}

/// Inverse of rebase: assembles sum_m c[m] (x - center)^m in the monomial basis.
template <typename Scalar>
Polynomial<Scalar> from_centered(const std::vector<Scalar>& c, const Scalar& center) {
  return Polynomial<Scalar>(c).shifted(-center);
}

/// Falling power x(x-1)...(x-n+1); 1 for n = 0.
template <typename Scalar>
Scalar falling_power(const Scalar& x, int n) {
  Scalar out(1);
  for (int j = 0; j < n; ++j) out *= x - Scalar(j);
  return out;
}

/// The polynomial x(x-1)...(x-n+1).
template <typename Scalar = Rational>
Polynomial<Scalar> falling_power_poly(int n) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  for (int j = 0; j < n; ++j) out = out * Polynomial<Scalar>{Scalar(-j), Scalar(1)};
  return out;
}

}  // namespace umbral
