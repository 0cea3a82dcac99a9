#include <doctest.h>

#include "umbral/random.hpp"
#include "umbral/star_product.hpp"

using namespace umbral;

namespace {

RationalPolynomial P(std::initializer_list<Rational> c) { return RationalPolynomial(c); }

const RationalPolynomial X = P({0, 1});

}  // namespace

TEST_CASE("star product examples at q = 1/2") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  CHECK(star(X, X, half) == P({0, 0, Rational(4, 3)}));
  CHECK(star(X, P({0, 0, 1}), half) == P({0, 0, 0, Rational(12, 7)}));
  CHECK(star(P({0, 0, 1}), X, half) == P({0, 0, 0, Rational(16, 7)}));
  CHECK(star(P({3}), P({1, 1}), half) == P({3, 3}));
}

TEST_CASE("constant on the right is raised") {
  const auto psi = PsiSequence::custom({Rational(2), Rational(2), Rational(3), Rational(4)});
  CHECK(star(X, P({1}), psi) == P({0, Rational(1, 2)}));
}

TEST_CASE("classical star product is the ordinary product") {
  Rng rng(17);
  const auto classical = PsiSequence::classical();
  for (int t = 0; t < 50; ++t) {
    const auto f = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 8)));
    const auto g = random_polynomial(rng, static_cast<int>(random_int(rng, 0, 8)));
    CHECK(star(f, g, classical) == f * g);
  }
}

TEST_CASE("non-associativity witness") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  const auto left = star(star(X, X, half), X, half);
  const auto right = star(X, star(X, X, half), half);
  CHECK(left == P({0, 0, 0, Rational(64, 21)}));
  CHECK(right == P({0, 0, 0, Rational(16, 7)}));
  CHECK(verify_star_axiom("non-associativity", StarAxiomParams{half}, 8).pass);
}

TEST_CASE("star powers") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  CHECK(star_power(3, half) == P({0, 0, 0, Rational(16, 7)}));
  CHECK(star_power(0, half) == P({1}));
  for (int n = 0; n <= 10; ++n)
    CHECK(star_power(n, half) == RationalPolynomial::monomial(n, half.star_coefficient(n)));
}

TEST_CASE("exponentials") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  CHECK(exp_psi(1, half, 2).polynomial() == P({1, 1, Rational(2, 3)}));
  CHECK(exp_classical(2, 3) == P({1, 2, 2, Rational(4, 3)}));
  // exp{x_psi} exp_psi[x] = exp_psi[2x]; coefficient of x^2 is 4/2_psi! = 8/3
  const auto e = exp_psi(1, half, 2);
  CHECK(star(exp_classical(1, 2), e).polynomial()[2] == Rational(8, 3));
}

TEST_CASE("series from different sequences do not mix") {
  const auto a = exp_psi(1, PsiSequence::q_deformed(Rational(1, 2)), 4);
  const auto b = exp_psi(1, PsiSequence::q_deformed(Rational(1, 3)), 4);
  try {
    (void)star(a, b);
    FAIL("expected MixedPsiContext");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedPsiContext);
  }
}

TEST_CASE("star product cap") {
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  try {
    (void)star(RationalPolynomial::monomial(4), RationalPolynomial::monomial(4), half, 6);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("Leibniz rule against direct coefficients") {
  // d_psi (x *_psi g) = g + x *_psi d_psi g for g = x
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  CHECK(psi_lower(star(X, X, half), half) == P({0, 2}));
  CHECK(star(P({1}), X, half) + star(X, psi_lower(X, half), half) == P({0, 2}));
}

TEST_CASE("axioms on the psi set") {
  Rng rng(31);
  std::vector<PsiSequence> set{PsiSequence::classical(), PsiSequence::q_deformed(Rational(1, 2)),
                               PsiSequence::q_deformed(Rational(2)), PsiSequence::q_deformed(Rational(-1, 3))};
  for (const auto& psi : set) {
    for (const std::string id : {"obs-a", "obs-c", "obs-d", "leibniz", "obs-f", "star-power-law"}) {
      StarAxiomParams p{psi, Rational(2, 3), Rational(-3, 5), 100, 2024};
      const Verdict v = verify_star_axiom(id, p, 16);
      CHECK_MESSAGE(v.pass, id << " " << psi.label());
      CHECK(v.cases >= 1);
    }
  }
  CHECK(verify_star_axiom("obs-e", StarAxiomParams{}, 8).pass);
  try {
    (void)verify_star_axiom("obs-z", StarAxiomParams{}, 8);
    FAIL("expected UnknownAxiom");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownAxiom);
  }
}
