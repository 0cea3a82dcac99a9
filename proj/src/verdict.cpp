#include "umbral/verdict.hpp"

namespace umbral {

bool record_case(Verdict& verdict, const RationalPolynomial& input, const RationalPolynomial& lhs,
                 const RationalPolynomial& rhs, int degree) {
  ++verdict.cases;
  if (lhs == rhs) return true;
  if (verdict.pass) verdict.counterexample = Counterexample{input, lhs, rhs, degree};
  verdict.pass = false;
  return false;
}

void absorb(Verdict& total, const Verdict& part) {
  total.cases += part.cases;
  if (!part.pass && total.pass) {
    total.pass = false;
    total.counterexample = part.counterexample;
    if (total.note.empty()) total.note = part.note.empty() ? part.id : part.note;
  }
}

Verdict compare_on_basis(const std::string& id, const RationalOperator& lhs, const RationalOperator& rhs,
                         int max_degree) {
  if (lhs.cap() < max_degree || rhs.cap() < max_degree)
    throw Error(ErrorKind::CapExceeded, id + ": operators defined only up to degree " +
                                            std::to_string(std::min(lhs.cap(), rhs.cap())));
  Verdict v{id};
  for (int m = 0; m <= max_degree; ++m)
    if (!record_case(v, RationalPolynomial::monomial(m), lhs.on_monomial(m), rhs.on_monomial(m), m)) break;
  return v;
}

}  // namespace umbral
