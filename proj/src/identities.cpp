#include "umbral/identities.hpp"

#include "umbral/error.hpp"
#include "umbral/grid_function.hpp"
#include "umbral/operators.hpp"
#include "umbral/transport.hpp"

namespace umbral {

Representation parse_representation(const std::string& name) {
  if (name == "classical") return Representation::Classical;
  if (name == "delta") return Representation::Delta;
  if (name == "psi") return Representation::Psi;
  if (name == "falling") return Representation::FallingPower;
  if (name == "mixed") return Representation::Mixed;
  throw Error(ErrorKind::InvalidArgument, "unknown representation '" + name + "'");
}

std::string to_string(Representation rep) {
  switch (rep) {
    case Representation::Classical: return "classical";
    case Representation::Delta: return "delta";
    case Representation::Psi: return "psi";
    case Representation::FallingPower: return "falling";
    case Representation::Mixed: return "mixed";
  }
  return "unknown";
}

OperatorPair make_pair(Representation rep, const PsiSequence& psi, const Rational& center, int cap) {
  switch (rep) {
    case Representation::Classical:
      return {ops::derivative(cap), ops::multiply_by(RationalPolynomial{-center, Rational(1)}, cap),
              "(D, x - " + to_string(center) + ")"};
    case Representation::Delta:
      return {ops::forward_difference(cap), compose(ops::multiply_x(cap), ops::translation(-1, cap)),
              "(Delta, x E^-1)"};
    case Representation::Psi:
      return {ops::psi_derivative(psi, cap, center), ops::psi_multiply(psi, cap, center),
              "(d_psi, z_psi) @" + to_string(center) + " " + psi.label()};
    case Representation::FallingPower: {
      const TransportedCalculus t = transport_calculus(GradedBasis::falling_power(cap + 1), psi);
      return {t.lowering.restricted(cap), t.raising, "(Q, x_Q) falling " + psi.label()};
    }
    case Representation::Mixed:
      return {ops::psi_derivative(psi, cap), ops::psi_multiply(psi, cap, center),
              "(d_psi @0, z_psi @" + to_string(center) + ") " + psi.label(),
              center == 0 || psi.kind() == PsiSequence::Kind::Classical};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown representation");
}

std::pair<RationalOperator, RationalOperator> bernoulli_sides(const RationalOperator& p, const RationalOperator& q,
                                                              int n) {
  const RationalOperator minus_q = scale(Rational(-1), q);
  RationalOperator sum = scale(Rational(0), RationalOperator::identity(p.cap()));
  RationalOperator p_k = RationalOperator::identity(p.cap());
  RationalOperator q_k = RationalOperator::identity(q.cap());
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      p_k = compose(p, p_k);
      q_k = compose(minus_q, q_k);
    }
    sum = add(sum, compose(q_k, p_k), 1 / factorial(k));
  }
  RationalOperator lhs = compose(p, sum);
  RationalOperator rhs = scale(1 / factorial(n), compose(q_k, compose(p, p_k)));
  return {lhs.named("bernoulli lhs"), rhs.named("bernoulli rhs")};
}

std::pair<RationalOperator, RationalOperator> telescoping_sides(const RationalOperator& a, const RationalOperator& b,
                                                                int n) {
  const int cap = std::min(a.cap(), b.cap());
  const RationalOperator one = RationalOperator::identity(cap);
  const RationalOperator one_minus_ab = one - compose(a, b);
  RationalOperator lhs = scale(Rational(0), one);
  RationalOperator a_k = RationalOperator::identity(a.cap());
  RationalOperator b_k = RationalOperator::identity(b.cap());
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      a_k = compose(a, a_k);
      b_k = compose(b, b_k);
    }
    lhs = lhs + compose(a_k, compose(one_minus_ab, b_k));
  }
  RationalOperator rhs = one - compose(compose(a, a_k), compose(b, b_k));
  return {lhs.named("telescoping lhs"), rhs.named("telescoping rhs")};
}

namespace {

GridFunction grid_power(GridFunction f, int k, GridFunction (*step)(const GridFunction&)) {
  for (int i = 0; i < k; ++i) f = step(f);
  return f;
}

GridFunction sum_from_zero(const GridFunction& f) { return summation(f, 0); }

GridFunction minus(const GridFunction& a, const GridFunction& b) {
  std::vector<Rational> v;
  for (std::int64_t x = a.first(); x <= a.last(); ++x) v.push_back(a.at(x) - b.at(x));
  return GridFunction(std::move(v), a.first());
}

RationalPolynomial as_poly(const GridFunction& g) { return RationalPolynomial(g.values()); }

}  // namespace

Verdict verify_telescoping_grid(int n, int grid_last) {
  if (grid_last <= n)
    throw Error(ErrorKind::GridDomainTooSmall, "grid 0.." + std::to_string(grid_last) + " too small for order " +
                                                   std::to_string(n));
  Verdict v{"telescoping-grid"};
  for (int j = 0; j <= grid_last; ++j) {
    std::vector<Rational> e(static_cast<std::size_t>(grid_last) + 1, Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    const GridFunction f(e);
    GridFunction lhs(std::vector<Rational>(e.size(), Rational(0)));
    for (int k = 0; k <= n; ++k) {
      const GridFunction bk = grid_power(f, k, forward_difference);
      const GridFunction inner = minus(bk, sum_from_zero(forward_difference(bk)));
      const GridFunction term = grid_power(inner, k, sum_from_zero);
      std::vector<Rational> acc = lhs.values();
      for (std::int64_t x = 0; x <= grid_last; ++x) acc[static_cast<std::size_t>(x)] += term.at(x);
      lhs = GridFunction(std::move(acc));
    }
    const GridFunction tail = grid_power(grid_power(f, n + 1, forward_difference), n + 1, sum_from_zero);
    const GridFunction rhs = minus(f, tail);
    if (!record_case(v, as_poly(f), as_poly(lhs), as_poly(rhs), j)) break;
  }
  return v;
}

namespace {

std::pair<RationalOperator, RationalOperator> integration_pair(const IdentityParams& p, int cap) {
  if (p.pair == IntegrationPair::Integral) return {ops::integral_from(p.alpha, cap), ops::derivative(cap)};
  return {ops::summation(cap), ops::forward_difference(cap)};
}

RationalOperator series_operator(int terms, bool divided, bool alternating, int cap) {
  // sum_n c_n x^{n - divided} D^n with c_n = (+-1)^{n - divided} / n!.
  RationalOperator acc = scale(Rational(0), RationalOperator::identity(cap));
  const RationalOperator d = ops::derivative(cap);
  const int start = divided ? 1 : 0;
  for (int n = start; n <= terms; ++n) {
    const int power_of_x = n - start;
    const Rational sign = alternating && (power_of_x % 2 == 1) ? Rational(-1) : Rational(1);
    acc = add(acc, compose(ops::multiply_by(RationalPolynomial::monomial(power_of_x), cap), power(d, n)),
              sign / factorial(n));
  }
  return acc;
}

Verdict jackson_representation(const IdentityParams& p, int max_degree) {
  if (p.psi.kind() != PsiSequence::Kind::QDeformed)
    throw Error(ErrorKind::InvalidArgument, "jackson-rep needs a q-deformed psi sequence");
  const Rational q = p.psi.q();
  const int cap = max_degree + 2;
  const RationalOperator one = RationalOperator::identity(cap);
  const RationalOperator q_derivative =
      scale(1 / (1 - q), compose(add(one, ops::dilation(q, cap), -q), ops::divided_difference(cap)));
  Verdict v{"jackson-rep"};
  absorb(v, compare_on_basis("d_q = d_psi", q_derivative, ops::psi_derivative(p.psi, cap), max_degree));

  const RationalOperator resolvent = RationalOperator::from_basis_action(cap, 0, "(1-qQ)^-1", [&](int m) {
    return RationalPolynomial::monomial(m, 1 / (1 - q * pow(q, m)));
  });
  const RationalOperator right_inverse = scale(1 - q, compose(ops::multiply_x(cap), resolvent));
  absorb(v, compare_on_basis("d_q right inverse", compose(q_derivative, right_inverse), one, max_degree));
  absorb(v, compare_on_basis("jackson = int_psi", right_inverse, ops::psi_integral(p.psi, cap), max_degree));
  return v;
}

}  // namespace

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{"telescoping",   "one-minus-ab",   "bernoulli-viskov",
                                            "ghw",           "jackson-rep",    "psi-factorization",
                                            "hist-eps0",     "hist-div-diff",  "hist-div-diff-printed"};
  return ids;
}

Verdict verify_identity(const std::string& id, const IdentityParams& p, int max_degree) {
  Verdict v{id};
  if (id == "ghw") {
    const OperatorPair pair = make_pair(p.representation, p.psi, p.center, max_degree + 2);
    v = compare_on_basis(id, commutator(pair.lowering, pair.raising),
                         RationalOperator::identity(max_degree), max_degree);
    v.note = pair.label + (pair.ghw ? "" : " (non-GHW pair)");
  } else if (id == "bernoulli-viskov") {
    const OperatorPair pair = make_pair(p.representation, p.psi, p.center, max_degree + p.order + 2);
    for (int n = 0; n <= p.order && v.pass; ++n) {
      const auto [lhs, rhs] = bernoulli_sides(pair.lowering, pair.raising, n);
      absorb(v, compare_on_basis("order " + std::to_string(n), lhs, rhs, max_degree));
    }
    if (v.note.empty()) v.note = pair.label;
  } else if (id == "telescoping") {
    const auto [a, b] = integration_pair(p, max_degree + p.order + 3);
    for (int n = 0; n <= p.order && v.pass; ++n) {
      const auto [lhs, rhs] = telescoping_sides(a, b, n);
      absorb(v, compare_on_basis("order " + std::to_string(n), lhs, rhs, max_degree));
    }
  } else if (id == "one-minus-ab") {
    const int cap = max_degree + 2;
    const auto [a, b] = integration_pair(p, cap);
    const Rational point = p.pair == IntegrationPair::Integral ? p.alpha : Rational(0);
    v = compare_on_basis(id, RationalOperator::identity(cap) - compose(a, b), ops::evaluation(point, cap),
                         max_degree);
  } else if (id == "jackson-rep") {
    v = jackson_representation(p, max_degree);
  } else if (id == "psi-factorization") {
    const int cap = max_degree + 1;
    v = compare_on_basis(id, ops::psi_derivative(p.psi, cap),
                         compose(ops::psi_number(p.psi, cap), ops::divided_difference(cap)), max_degree);
  } else if (id == "hist-eps0") {
    v = compare_on_basis(id, series_operator(max_degree, false, true, max_degree), ops::evaluation(0, max_degree),
                         max_degree);
  } else if (id == "hist-div-diff" || id == "hist-div-diff-printed") {
    const bool alternating = id == "hist-div-diff";
    v = compare_on_basis(id, series_operator(max_degree, true, alternating, max_degree),
                         ops::divided_difference(max_degree), max_degree);
  } else {
    throw Error(ErrorKind::UnknownIdentity, "no identity named '" + id + "'");
  }
  v.id = id;
  return v;
}

}  // namespace umbral
