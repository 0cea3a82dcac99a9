#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "umbral/error.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Linear map on polynomials of degree <= cap(), stored as the dense matrix of
/// its action on the monomial basis: column m holds the coefficients of Op x^m.
///
/// shift() bounds the degree change, deg(Op x^m) <= max(m + shift, 0), so the
/// matrix has max(cap + shift, 0) + 1 rows. Compositions shrink the cap so that
/// every intermediate image stays representable; nothing is ever truncated.
template <typename Scalar>
class LinearOperator {
 public:
  LinearOperator(Matrix<Scalar> matrix, int shift, std::string name)
      : matrix_(std::move(matrix)), shift_(shift), name_(std::move(name)) {
    const Eigen::Index rows = output_size(cap(), shift_);
    if (matrix_.rows() != rows) {
      Matrix<Scalar> fitted = Matrix<Scalar>::Zero(rows, matrix_.cols());
      const Eigen::Index common = std::min(rows, matrix_.rows());
      fitted.topRows(common) = matrix_.topRows(common);
      for (Eigen::Index i = common; i < matrix_.rows(); ++i)
        for (Eigen::Index j = 0; j < matrix_.cols(); ++j)
          if (matrix_(i, j) != Scalar(0))
            throw Error(ErrorKind::InvalidArgument,
                        name_ + ": image of x^" + std::to_string(j) + " exceeds declared shift");
      matrix_ = std::move(fitted);
    }
  }

  /// Builds the matrix column by column from the image of each x^m, m <= cap.
  static LinearOperator from_basis_action(int cap, int shift, std::string name,
                                          const std::function<Polynomial<Scalar>(int)>& action) {
    if (cap < 0) throw Error(ErrorKind::CapExceeded, name + ": negative cap");
    const Eigen::Index rows = output_size(cap, shift);
    Matrix<Scalar> m = Matrix<Scalar>::Zero(rows, cap + 1);
    for (int j = 0; j <= cap; ++j) {
      const Polynomial<Scalar> image = action(j);
      if (image.degree() >= rows)
        throw Error(ErrorKind::InvalidArgument,
                    name + ": image of x^" + std::to_string(j) + " exceeds declared shift");
      m.col(j).head(image.degree() + 1) = image.to_vector(image.degree() + 1);
    }
    return LinearOperator(std::move(m), shift, std::move(name));
  }

  static LinearOperator identity(int cap) {
    return LinearOperator(Matrix<Scalar>::Identity(cap + 1, cap + 1), 0, "1");
  }

  int cap() const { return static_cast<int>(matrix_.cols()) - 1; }
  int shift() const { return shift_; }
  const std::string& name() const { return name_; }
  const Matrix<Scalar>& matrix() const { return matrix_; }

  LinearOperator named(std::string name) const {
    LinearOperator out = *this;
    out.name_ = std::move(name);
    return out;
  }

  /// Same action on the smaller domain of degree <= new_cap.
  LinearOperator restricted(int new_cap) const {
    if (new_cap > cap() || new_cap < 0)
      throw Error(ErrorKind::CapExceeded, name_ + ": cannot restrict cap " + std::to_string(cap()) +
                                              " to " + std::to_string(new_cap));
    return LinearOperator(matrix_.leftCols(new_cap + 1), shift_, name_);
  }

  Polynomial<Scalar> operator()(const Polynomial<Scalar>& p) const { return apply(p); }

  Polynomial<Scalar> apply(const Polynomial<Scalar>& p) const {
    if (p.degree() > cap())
      throw Error(ErrorKind::CapExceeded, name_ + ": input degree " + std::to_string(p.degree()) +
                                              " exceeds cap " + std::to_string(cap()));
    if (p.is_zero()) return {};
    return Polynomial<Scalar>::from_vector(matrix_.leftCols(p.degree() + 1) *
                                           p.to_vector(p.degree() + 1));
  }

  /// Image of x^m.
  Polynomial<Scalar> on_monomial(int m) const {
    if (m > cap()) throw Error(ErrorKind::CapExceeded, name_ + ": x^" + std::to_string(m) + " above cap");
    return Polynomial<Scalar>::from_vector(matrix_.col(m));
  }

  friend bool operator==(const LinearOperator& a, const LinearOperator& b) {
    return a.matrix_.cols() == b.matrix_.cols() && a.matrix_.rows() == b.matrix_.rows() &&
           a.matrix_ == b.matrix_;
  }

  static Eigen::Index output_size(int cap, int shift) { return std::max(cap + shift, 0) + 1; }

 private:
  Matrix<Scalar> matrix_;
  int shift_;
  std::string name_;
};

using RationalOperator = LinearOperator<Rational>;

namespace detail {

template <typename Scalar>
Matrix<Scalar> top_rows_padded(const Matrix<Scalar>& m, Eigen::Index rows) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(rows, m.cols());
  const Eigen::Index common = std::min(rows, m.rows());
  out.topRows(common) = m.topRows(common);
  return out;
}

// Smallest s with every nonzero entry (i, j) satisfying i <= max(j + s, 0).
template <typename Scalar>
int tight_shift(const Matrix<Scalar>& m, int fallback) {
  int s = fallback;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = m.rows() - 1; i > 0; --i)
      if (m(i, j) != Scalar(0)) {
        s = std::max(s, static_cast<int>(i - j));
        break;
      }
  return s;
}

}  // namespace detail

/// outer ∘ inner, on the largest cap for which inner's images fit in outer.
template <typename Scalar>
LinearOperator<Scalar> compose(const LinearOperator<Scalar>& outer, const LinearOperator<Scalar>& inner) {
  const int cap = std::min(inner.cap(), outer.cap() - inner.shift());
  if (cap < 0)
    throw Error(ErrorKind::CapExceeded, "cannot compose " + outer.name() + " after " + inner.name());
  const Matrix<Scalar> right =
      detail::top_rows_padded<Scalar>(inner.matrix().leftCols(cap + 1), outer.cap() + 1);
  const Matrix<Scalar> product = outer.matrix() * right;
  const int shift = detail::tight_shift(product, outer.shift() + inner.shift());
  return LinearOperator<Scalar>(
      detail::top_rows_padded(product, LinearOperator<Scalar>::output_size(cap, shift)), shift,
      outer.name() + " " + inner.name());
}

template <typename Scalar>
LinearOperator<Scalar> operator*(const LinearOperator<Scalar>& outer, const LinearOperator<Scalar>& inner) {
  return compose(outer, inner);
}

template <typename Scalar>
LinearOperator<Scalar> add(const LinearOperator<Scalar>& a, const LinearOperator<Scalar>& b,
                           const Scalar& b_factor = Scalar(1)) {
  const int cap = std::min(a.cap(), b.cap());
  const int shift = std::max(a.shift(), b.shift());
  const Eigen::Index rows = LinearOperator<Scalar>::output_size(cap, shift);
  Matrix<Scalar> sum = detail::top_rows_padded<Scalar>(a.matrix().leftCols(cap + 1), rows);
  sum += b_factor * detail::top_rows_padded<Scalar>(b.matrix().leftCols(cap + 1), rows);
  const std::string op = b_factor == Scalar(1) ? " + " : b_factor == Scalar(-1) ? " - " : " + c*";
  return LinearOperator<Scalar>(std::move(sum), shift, "(" + a.name() + op + b.name() + ")");
}

template <typename Scalar>
LinearOperator<Scalar> operator+(const LinearOperator<Scalar>& a, const LinearOperator<Scalar>& b) {
  return add(a, b);
}

template <typename Scalar>
LinearOperator<Scalar> operator-(const LinearOperator<Scalar>& a, const LinearOperator<Scalar>& b) {
  return add(a, b, Scalar(-1));
}

template <typename Scalar>
LinearOperator<Scalar> scale(const Scalar& c, const LinearOperator<Scalar>& a) {
  return LinearOperator<Scalar>(c * a.matrix(), a.shift(), "c*" + a.name());
}

/// A∘B − B∘A.
template <typename Scalar>
LinearOperator<Scalar> commutator(const LinearOperator<Scalar>& a, const LinearOperator<Scalar>& b) {
  return (compose(a, b) - compose(b, a)).named("[" + a.name() + ", " + b.name() + "]");
}

/// a^k, with a^0 the identity on a's domain.
template <typename Scalar>
LinearOperator<Scalar> power(const LinearOperator<Scalar>& a, int k) {
  LinearOperator<Scalar> out = LinearOperator<Scalar>::identity(a.cap());
  for (int i = 0; i < k; ++i) out = compose(a, out);
  return out;
}

/// f(A) = sum_i f_i A^i.
template <typename Scalar>
LinearOperator<Scalar> evaluate_at(const Polynomial<Scalar>& f, const LinearOperator<Scalar>& a) {
  LinearOperator<Scalar> acc = scale(Scalar(0), LinearOperator<Scalar>::identity(a.cap()));
  LinearOperator<Scalar> a_power = LinearOperator<Scalar>::identity(a.cap());
  for (int i = 0; i <= f.degree(); ++i) {
    if (i > 0) a_power = compose(a, a_power);
    acc = add(acc, a_power, f[i]);
  }
  return acc;
}

}  // namespace umbral
