#include <doctest.h>

#include <cmath>

#include "umbral/grid_function.hpp"
#include "umbral/integration.hpp"
#include "umbral/operators.hpp"
#include "umbral/random.hpp"

using namespace umbral;

namespace {

RationalPolynomial P(std::initializer_list<Rational> c) { return RationalPolynomial(c); }

}  // namespace

TEST_CASE("psi integral examples at q = 1/2") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  CHECK(psi_antiderivative(P({0, 0, 1}), half) == P({0, 0, 0, Rational(4, 7)}));
  CHECK(psi_integrate(P({0, 1}), half, 0, 1) == Rational(2, 3));
}

TEST_CASE("d_psi inverts the psi integral") {
  Rng rng(41);
  for (const auto& psi : {PsiSequence::classical(), PsiSequence::q_deformed(Rational(1, 2)),
                          PsiSequence::q_deformed(Rational(2)), PsiSequence::q_deformed(Rational(-1, 3))}) {
    for (int t = 0; t < 20; ++t) {
      const auto f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 16)));
      const Rational c = random_rational(rng, 4);
      const auto anti = psi_antiderivative(f, psi, c);
      CHECK(ops::psi_derivative(psi, 17, c)(anti) == f);
      CHECK(anti.evaluate(c) == 0);
    }
    for (int m = 0; m <= 16; ++m) {
      const auto xm = RationalPolynomial::monomial(m);
      CHECK(ops::psi_derivative(psi, 17)(ops::psi_integral(psi, 16)(xm)) == xm);
    }
  }
}

TEST_CASE("Jackson symbolic closed form") {
  const auto r = jackson_symbolic(P({0, 0, 1}), Rational(1, 2), 0, 1);
  CHECK(r.exact == Rational(4, 7));
  // x + 1 over [1, 2] at q = 1/3: (z^2 (1-q)/(1-q^2) + z) between the limits
  const auto s = jackson_symbolic(P({1, 1}), Rational(1, 3), 1, 2);
  CHECK(s.exact == Rational(3, 4) * 3 + 1);
  for (const Rational q : {Rational(0), Rational(1), Rational(3, 2), Rational(-1, 2)}) {
    try {
      (void)jackson_symbolic(P({1}), q, 0, 1);
      FAIL("expected QOutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::QOutOfRange);
    }
  }
}

TEST_CASE("Jackson numeric example") {
  const auto r = jackson_numeric(P({0, 0, 1}), Rational(1, 2), 0, 1, JacksonStop{1e-12, std::nullopt});
  CHECK(std::abs(r.value - 4.0 / 7.0) <= r.tail_bound);
  CHECK(r.tail_bound <= 1e-12);
  CHECK(std::abs(r.value - 4.0 / 7.0) <= 1e-10);
}

TEST_CASE("Jackson near q = 1") {
  const auto r = jackson_numeric(P({0, 0, 1}), Rational(999, 1000), 0, 1, JacksonStop{1e-12, std::nullopt});
  CHECK(std::abs(r.value - 1.0 / 3.0) <= 1e-3);
  CHECK(std::abs(r.value - to_double(jackson_symbolic(P({0, 0, 1}), Rational(999, 1000), 0, 1).exact)) <=
        r.tail_bound);
}

TEST_CASE("Jackson tail bound on random inputs") {
  Rng rng(2024);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 6)));
    const Rational q(random_int(rng, 1, 19), 20);
    const Rational from = random_rational(rng, 3);
    const Rational to = random_rational(rng, 3);
    const JacksonStop stop = t % 2 ? JacksonStop{1e-12, std::nullopt}
                                   : JacksonStop{std::nullopt, static_cast<int>(random_int(rng, 1, 60))};
    const auto numeric = jackson_numeric(f, q, from, to, stop);
    const double exact = to_double(jackson_symbolic(f, q, from, to).exact);
    CHECK(std::abs(numeric.value - exact) <= numeric.tail_bound);
    if (stop.tolerance) CHECK(std::abs(numeric.value - exact) <= 1e-10);
  }
}

TEST_CASE("Cauchy kernel examples") {
  CHECK(cauchy_kernel_integral(P({1}), 2, 0) == P({0, 0, Rational(1, 2)}));
  const auto one = GridFunction(std::vector<Rational>(6, Rational(1)));
  CHECK(cauchy_kernel_summation(one, 2).at(3) == 3);
  CHECK(cauchy_kernel_summation(P({1}), 2).evaluate(3) == 3);
}

TEST_CASE("Cauchy kernels equal iterated single steps") {
  Rng rng(8);
  for (int k = 1; k <= 5; ++k) {
    for (int t = 0; t < 10; ++t) {
      const auto f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 6)));
      const Rational base = random_rational(rng, 4);
      CHECK(cauchy_kernel_integral(f, k, base) == iterated_integral(f, k, base));
      const Rational ibase(random_int(rng, -3, 3));
      CHECK(cauchy_kernel_summation(f, k, ibase) == iterated_summation(f, k, ibase));
      // against powers of the summation operator matrix
      CHECK(cauchy_kernel_summation(f, k) == power(ops::summation(6 + k), k).apply(f));
      const auto g = GridFunction::sample(f, 0, 8);
      CHECK(cauchy_kernel_summation(g, k) == iterated_summation(g, k));
    }
  }
}

TEST_CASE("summation kernel needs an integer base") {
  try {
    (void)cauchy_kernel_summation(P({1}), 2, Rational(1, 2));
    FAIL("expected NonIntegerGridArg");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegerGridArg);
  }
}

TEST_CASE("per partes example") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  const auto r = per_partes(P({0, 1}), P({0, 0, 1}), half, 0, 1);
  CHECK(r.lhs == Rational(8, 7));
  CHECK(r.rhs == Rational(8, 7));
  CHECK(r.pass);
}

TEST_CASE("per partes on random triples") {
  Rng rng(13);
  const std::vector<PsiSequence> set{PsiSequence::classical(), PsiSequence::q_deformed(Rational(1, 2)),
                                     PsiSequence::q_deformed(Rational(2)),
                                     PsiSequence::q_deformed(Rational(-1, 3))};
  for (int t = 0; t < 100; ++t) {
    const auto& psi = set[static_cast<std::size_t>(t) % set.size()];
    const auto f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 6)));
    const auto g = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 6)));
    const auto r = per_partes(f, g, psi, random_rational(rng, 5), random_rational(rng, 5));
    CHECK(r.pass);
    CHECK(r.lhs == r.rhs);
  }
}
