#include "umbral/transport.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "umbral/error.hpp"
#include "umbral/expression.hpp"
#include "umbral/identities.hpp"
#include "umbral/random.hpp"
#include "umbral/star_product.hpp"

namespace umbral {

GradedBasis::GradedBasis(std::vector<RationalPolynomial> elements, std::string label)
    : elements_(std::move(elements)), label_(std::move(label)) {
  const int n_max = static_cast<int>(elements_.size()) - 1;
  if (n_max < 0) throw Error(ErrorKind::SingularBasis, label_ + ": empty basis");
  to_monomial_ = RationalMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (elements_[n].degree() != n)
      throw Error(ErrorKind::SingularBasis, label_ + ": element " + std::to_string(n) + " has degree " +
                                                std::to_string(elements_[n].degree()));
    to_monomial_.col(n).head(n + 1) = elements_[n].to_vector(n + 1);
  }
  from_monomial_ = to_monomial_.triangularView<Eigen::Upper>().solve(RationalMatrix::Identity(n_max + 1, n_max + 1));
}

GradedBasis GradedBasis::monomial(int max_degree) {
  std::vector<RationalPolynomial> e;
  for (int n = 0; n <= max_degree; ++n) e.push_back(RationalPolynomial::monomial(n));
  return GradedBasis(std::move(e), "monomial");
}

GradedBasis GradedBasis::falling_power(int max_degree) {
  std::vector<RationalPolynomial> e;
  for (int n = 0; n <= max_degree; ++n) e.push_back(falling_power_poly(n));
  return GradedBasis(std::move(e), "falling");
}

GradedBasis GradedBasis::shifted(const Rational& center, int max_degree) {
  std::vector<RationalPolynomial> e;
  const RationalPolynomial base{-center, Rational(1)};
  for (int n = 0; n <= max_degree; ++n) e.push_back(pow(base, n));
  return GradedBasis(std::move(e), "shifted:" + to_string(center));
}

GradedBasis GradedBasis::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read basis file " + path.string());
  std::vector<RationalPolynomial> e;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    e.push_back(parse_expression(line));
  }
  return GradedBasis(std::move(e), "file:" + path.string());
}

GradedBasis GradedBasis::from_spec(const std::string& spec, int max_degree) {
  if (spec == "monomial") return monomial(max_degree);
  if (spec == "falling") return falling_power(max_degree);
  if (spec.starts_with("shifted:")) return shifted(parse_rational(spec.substr(8)), max_degree);
  if (spec.starts_with("file:")) return from_file(spec.substr(5));
  throw Error(ErrorKind::InvalidArgument, "unknown basis '" + spec + "'");
}

RationalOperator GradedBasis::transport(const RationalMatrix& coordinate_action, int shift, std::string name) const {
  const Eigen::Index rows = coordinate_action.rows();
  const Eigen::Index cols = coordinate_action.cols();
  if (rows > to_monomial_.rows() || cols > to_monomial_.cols())
    throw Error(ErrorKind::CapExceeded, name + ": map leaves the span of " + label_);
  RationalMatrix m = to_monomial_.topLeftCorner(rows, rows) * coordinate_action *
                     from_monomial_.topLeftCorner(cols, cols);
  return RationalOperator(std::move(m), shift, std::move(name));
}

RationalPolynomial TransportedCalculus::star(const RationalPolynomial& f, const RationalPolynomial& g) const {
  return substitute_raising(f, g, [this](const RationalPolynomial& p) { return raising.apply(p); });
}

TransportedCalculus transport_calculus(const GradedBasis& basis, const PsiSequence& psi,
                                       TransportConvention convention) {
  const int n_max = basis.max_degree();
  if (n_max < 1) throw Error(ErrorKind::SingularBasis, basis.label() + ": need at least q_0 and q_1");

  RationalMatrix lower = RationalMatrix::Zero(n_max, n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    lower(n - 1, n) = convention == TransportConvention::PsiGraded ? psi.value(n) : Rational(n);

  RationalMatrix raise = RationalMatrix::Zero(n_max + 1, n_max);
  RationalMatrix integ = RationalMatrix::Zero(n_max + 1, n_max);
  for (int n = 0; n < n_max; ++n) {
    raise(n + 1, n) = Rational(n + 1) / psi.value(n + 1);
    integ(n + 1, n) = 1 / psi.value(n + 1);
  }
  const std::string tag = "[" + basis.label() + "]";
  return TransportedCalculus{basis,
                             psi,
                             convention,
                             basis.transport(lower, -1, "Q" + tag),
                             basis.transport(raise, 1, "x_Q" + tag),
                             basis.transport(integ, 1, "int_Q" + tag)};
}

namespace {

void require_degree(const TransportedCalculus& c, int max_degree) {
  if (max_degree > c.raising.cap())
    throw Error(ErrorKind::CapExceeded, "transported calculus on " + c.basis.label() + " reaches degree " +
                                            std::to_string(c.raising.cap()) + " only");
}

Verdict star_law(const TransportedCalculus& c, int max_degree, int cases) {
  Verdict v{"star-law"};
  const RationalPolynomial one = RationalPolynomial::constant(1);
  // Q x_Q^n 1 = n x_Q^{n-1} 1.
  RationalPolynomial prev;
  RationalPolynomial current = one;
  for (int n = 0; n <= max_degree; ++n) {
    if (n > 0) {
      prev = current;
      current = c.raising.apply(current);
    }
    const RationalPolynomial rhs = n == 0 ? RationalPolynomial{} : Rational(n) * prev;
    if (!record_case(v, RationalPolynomial::monomial(n), c.lowering.apply(current), rhs, n)) return v;
  }
  // Q(f * g) = (Df) * g + f * (Q g).
  Rng rng(0x5eed + static_cast<std::uint64_t>(max_degree));
  for (int i = 0; i < cases; ++i) {
    const int df = static_cast<int>(random_int(rng, 0, max_degree));
    const int dg = static_cast<int>(random_int(rng, 0, max_degree + 1 - df));
    const RationalPolynomial f = random_polynomial(rng, df);
    const RationalPolynomial g = random_polynomial(rng, dg);
    const RationalPolynomial lhs = c.lowering.apply(c.star(f, g));
    const RationalPolynomial rhs = c.star(f.derivative(), g) + c.star(f, c.lowering.apply(g));
    if (!record_case(v, f, lhs, rhs)) break;
  }
  return v;
}

}  // namespace

Verdict verify_transported(const TransportedCalculus& c, const std::string& suite, int max_degree, int order,
                           int cases) {
  Verdict v;
  if (suite == "ghw") {
    require_degree(c, max_degree);
    v = compare_on_basis("ghw", commutator(c.lowering, c.raising), RationalOperator::identity(max_degree),
                         max_degree);
  } else if (suite == "bernoulli") {
    v.id = "bernoulli";
    for (int n = 0; n <= order && v.pass; ++n) {
      const auto [lhs, rhs] = bernoulli_sides(c.lowering, c.raising, n);
      absorb(v, compare_on_basis("bernoulli n=" + std::to_string(n), lhs, rhs, max_degree));
    }
  } else if (suite == "star-law") {
    require_degree(c, max_degree);
    v = star_law(c, max_degree, cases);
  } else if (suite == "integration") {
    require_degree(c, max_degree);
    v = compare_on_basis("integration", compose(c.lowering, c.integral), RationalOperator::identity(max_degree),
                         max_degree);
  } else {
    throw Error(ErrorKind::UnknownIdentity, "no transported suite named '" + suite + "'");
  }
  v.id = "transport-" + suite;
  return v;
}

}  // namespace umbral
