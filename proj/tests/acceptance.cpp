// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "umbral/expansions.hpp"
#include "umbral/identities.hpp"
#include "umbral/integration.hpp"
#include "umbral/operators.hpp"
#include "umbral/random.hpp"
#include "umbral/star_product.hpp"

using namespace umbral;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<PsiSequence> psi_set() {
  Rng rng(1234);
  std::vector<PsiSequence> out{PsiSequence::classical(), PsiSequence::q_deformed(Rational(1, 2)),
                               PsiSequence::q_deformed(Rational(2)), PsiSequence::q_deformed(Rational(-1, 3))};
  for (int k = 0; k < 2; ++k)
    out.push_back(PsiSequence::custom(
        [&](int) {
          Rational v = 0;
          while (v == 0) v = random_rational(rng, 9);
          return v;
        },
        48, "custom" + std::to_string(k)));
  return out;
}

int degree(Rng& rng, int max) { return static_cast<int>(random_int(rng, 0, max)); }

void ghw(Outcome& o) {
  const auto start = Clock::now();
  int cases = 0;
  for (const auto& psi : psi_set()) {
    IdentityParams p;
    p.psi = psi;
    const Verdict v = verify_identity("ghw", p, 12);
    o.require(v.pass && v.cases == 13, "ghw " + psi.label());
    cases += v.cases;
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "time limit");
  o.detail << cases << " monomials over 6 sequences in " << t << " s";
}

void bernoulli(Outcome& o) {
  const auto start = Clock::now();
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  struct Rep {
    Representation rep;
    PsiSequence psi;
    Rational center;
  };
  const std::vector<Rep> reps{{Representation::Classical, PsiSequence::classical(), Rational(2, 3)},
                              {Representation::Delta, PsiSequence::classical(), 0},
                              {Representation::Psi, half, 0},
                              {Representation::FallingPower, PsiSequence::classical(), 0}};
  int cases = 0;
  for (const auto& r : reps) {
    IdentityParams p;
    p.psi = r.psi;
    p.representation = r.rep;
    p.center = r.center;
    p.order = 6;
    const Verdict v = verify_identity("bernoulli-viskov", p, 12);
    o.require(v.pass, "bernoulli " + to_string(r.rep));
    cases += v.cases;
  }
  const double t = seconds_since(start);
  o.require(t < 5.0, "time limit");
  o.detail << "n = 0..6 on 4 representations, " << cases << " checks in " << t << " s";
}

void classical(Outcome& o) {
  const auto fixed = classical_bt(RationalPolynomial{0, 0, 0, 1}, 1, 2, 2);
  o.require(fixed.terms == std::vector<Rational>{1, 3, 3} && fixed.remainder == 1 && fixed.target == 8,
            "fixed case");
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(rng, degree(rng, 10));
    const auto r = classical_bt(f, random_rational(rng, 9), random_rational(rng, 9), degree(rng, 12));
    o.require(r.residual == 0, "random residual");
  }
  o.detail << "fixed case 1 + 3 + 3 + 1 = 8; 100 random residuals 0";
}

void discrete(Outcome& o) {
  const auto fixed = maclaurin_bt(RationalPolynomial{0, 0, 1}, 2, 1);
  o.require(fixed.terms[0] + fixed.terms[1] == 2 && fixed.remainder == -2 && fixed.reconstruction == 0,
            "fixed case");
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(rng, degree(rng, 10));
    const int n = degree(rng, 12);
    const std::int64_t x = random_int(rng, 0, 10);
    const std::int64_t a = random_int(rng, 1, 10);
    o.require(delta_bt(f, x, n).residual == 0, "delta polynomial");
    o.require(delta_bt(GridFunction::sample(f, 0, x), x, n).residual == 0, "delta grid");
    o.require(maclaurin_bt(f, a, n).residual == 0, "maclaurin polynomial");
    o.require(maclaurin_bt(GridFunction::sample(f, 0, a), a, n).residual == 0, "maclaurin grid");
  }
  o.detail << "fixed case 2 + (-2) = 0; 400 random residuals 0";
}

void psi_expansion(Outcome& o) {
  Rng rng(5);
  int runs = 0;
  for (const auto& psi : psi_set())
    for (int t = 0; t < 20; ++t, ++runs) {
      const auto f = random_polynomial(rng, degree(rng, 10));
      const auto r = psi_bt(f, random_rational(rng, 5), random_rational(rng, 5), degree(rng, 12), psi,
                            random_rational(rng, 5));
      o.require(r.residual == 0, "psi residual " + psi.label());
    }
  for (int t = 0; t < 50; ++t) {
    const auto f = random_polynomial(rng, degree(rng, 10));
    const Rational a = random_rational(rng, 5);
    const Rational x = random_rational(rng, 5);
    const int n = degree(rng, 12);
    const auto p = psi_bt(f, a, x, n, PsiSequence::classical(), x);
    const auto c = classical_bt(f, a, x, n);
    o.require(p.terms == c.terms && p.remainder == c.remainder && p.target == c.target, "classical agreement");
  }
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  const RationalPolynomial f{0, 0, 1};
  const auto literal = literal_star_taylor_sum(f, 0, 2, half);
  o.require(literal != f, "literal reading should fail");
  o.require(literal == f * (Rational(2) / half.value(2)), "literal factor 2/2_psi");
  o.detail << runs << " psi runs, 50 classical agreements, literal reading off by " << to_string(literal[2]);
}

void star_suite(Outcome& o) {
  std::map<std::string, int> cases;
  for (const auto& psi : psi_set())
    for (const std::string id : {"leibniz", "obs-c", "star-power-law", "obs-a", "obs-d", "obs-f"}) {
      const Verdict v = verify_star_axiom(id, StarAxiomParams{psi, Rational(3, 4), Rational(-2, 5), 100, 77}, 16);
      o.require(v.pass, id + " " + psi.label());
      cases[id] += v.cases;
    }
  for (const auto& [id, n] : cases) o.require(n >= 100, id + " case count");
  const auto half = PsiSequence::q_deformed(Rational(1, 2));
  const RationalPolynomial x{0, 1};
  o.require(star(star(x, x, half), x, half) == RationalPolynomial::monomial(3, Rational(64, 21)) &&
                star(x, star(x, x, half), half) == RationalPolynomial::monomial(3, Rational(16, 7)),
            "non-associativity witness");
  o.detail << "6 axioms on 6 sequences (min " << std::min_element(cases.begin(), cases.end(), [](auto& a, auto& b) {
                return a.second < b.second;
              })->second << " cases per axiom); witness 64/21 vs 16/7";
}

void integration(Outcome& o) {
  Rng rng(6);
  for (const auto& psi : psi_set())
    for (int m = 0; m <= 16; ++m) {
      const auto xm = RationalPolynomial::monomial(m);
      o.require(ops::psi_derivative(psi, 17)(psi_antiderivative(xm, psi)) == xm, "d_psi int_psi " + psi.label());
    }
  const auto set = psi_set();
  for (int t = 0; t < 100; ++t) {
    const auto& psi = set[static_cast<std::size_t>(t) % set.size()];
    const auto r = per_partes(random_polynomial(rng, degree(rng, 6)), random_polynomial(rng, degree(rng, 6)), psi,
                              random_rational(rng, 5), random_rational(rng, 5));
    o.require(r.pass, "per partes");
  }
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto f = random_polynomial(rng, degree(rng, 6));
    const Rational q(random_int(rng, 1, 19), 20);
    const Rational from = random_rational(rng, 3);
    const Rational to = random_rational(rng, 3);
    const auto numeric = jackson_numeric(f, q, from, to, JacksonStop{1e-12, std::nullopt});
    const double err = std::abs(numeric.value - to_double(jackson_symbolic(f, q, from, to).exact));
    o.require(err <= numeric.tail_bound && err <= 1e-10, "jackson numeric");
    worst = std::max(worst, err);
  }
  const auto near_one =
      jackson_numeric(RationalPolynomial{0, 0, 1}, Rational(999, 1000), 0, 1, JacksonStop{1e-12, std::nullopt});
  o.require(std::abs(near_one.value - 1.0 / 3.0) <= 1e-3, "q = 0.999");
  o.detail << "worst Jackson error " << worst << "; q = 0.999 gives " << near_one.value;
}

void kernels(Outcome& o) {
  Rng rng(7);
  int cases = 0;
  for (int k = 1; k <= 5; ++k)
    for (int t = 0; t < 20; ++t, ++cases) {
      const auto f = random_polynomial(rng, degree(rng, 8));
      const Rational base = random_rational(rng, 5);
      const Rational ibase(random_int(rng, -5, 5));
      o.require(cauchy_kernel_integral(f, k, base) == iterated_integral(f, k, base), "integral kernel");
      o.require(cauchy_kernel_summation(f, k, ibase) == iterated_summation(f, k, ibase), "summation kernel");
      const auto g = GridFunction::sample(f, 0, 10);
      o.require(cauchy_kernel_summation(g, k) == iterated_summation(g, k), "grid summation kernel");
    }
  o.detail << cases << " functions, k = 1..5, both kernels";
}

void historical(Outcome& o) {
  IdentityParams p;
  o.require(verify_identity("hist-eps0", p, 8).pass, "eps0");
  o.require(verify_identity("hist-div-diff", p, 8).pass, "corrected divided difference");
  const Verdict printed = verify_identity("hist-div-diff-printed", p, 8);
  o.require(!printed.pass && printed.counterexample && printed.counterexample->degree == 2,
            "printed divided difference counterexample");
  o.detail << "printed expansion fails first at m = " << (printed.counterexample ? printed.counterexample->degree : -1);
}

std::pair<int, std::string> run_binary(const std::string& args) {
  const std::string command = std::string(UMBRAL_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli(Outcome& o) {
  const std::vector<std::string> commands{
      "expand --engine classical --fn 'x^3' --alpha 1 --point 2 --order 2",
      "verify --suite ghw --psi q:1/2 --degree 10",
      "integrate --mode jackson --q 1/2 --from 0 --to 1 --fn 'x^2' --eps 1e-12"};
  std::vector<nlohmann::json> docs;
  for (const auto& c : commands) {
    const auto first = run_binary(c);
    const auto second = run_binary(c);
    o.require(first.first == 0, "exit code of: " + c);
    o.require(first == second, "byte-identical output of: " + c);
    try {
      docs.push_back(nlohmann::json::parse(first.second));
    } catch (const std::exception&) {
      o.require(false, "JSON output of: " + c);
      return;
    }
  }
  o.require(docs[0]["result"]["terms"] == nlohmann::json::array({"1", "3", "3"}), "expand terms");
  o.require(docs[0]["result"]["remainder"] == "1" && docs[0]["residual"] == "0", "expand remainder");
  o.require(docs[1]["result"]["pass"] == true, "verify pass");
  const double value = std::stod(docs[2]["result"]["value"].get<std::string>());
  const double bound = std::stod(docs[2]["result"]["tailBound"].get<std::string>());
  o.require(std::abs(value - 0.5714285714) < 1e-10 && bound <= 1e-12, "jackson value");
  o.detail << "3 commands, each run twice; jackson " << docs[2]["result"]["value"].get<std::string>();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"GHW commutator on the psi set", ghw},
      {"Bernoulli identity on four representations", bernoulli},
      {"classical expansion", classical},
      {"delta and maclaurin expansions", discrete},
      {"psi expansion", psi_expansion},
      {"star product suite", star_suite},
      {"integration", integration},
      {"Cauchy kernels", kernels},
      {"historical expansions", historical},
      {"CLI", cli}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": "
              << o.detail.str() << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
