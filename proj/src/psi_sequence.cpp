#include "umbral/psi_sequence.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "umbral/error.hpp"

namespace umbral {

namespace {

Rational q_integer(const Rational& q, int n) {
  Rational sum = 0;
  Rational power = 1;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= q;
  }
  return sum;
}

void validate(const std::vector<Rational>& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == 0)
      throw Error(ErrorKind::ZeroPsiValue, "n_psi = 0 at n = " + std::to_string(i + 1),
                  static_cast<long>(i + 1));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

PsiSequence::PsiSequence(Kind kind, Rational q, std::vector<Rational> table, bool extendable,
                         std::string label)
    : kind_(kind), q_(std::move(q)), extendable_(extendable), label_(std::move(label)) {
  validate(table);
  std::vector<Rational> fact{Rational(1)};
  for (const auto& v : table) fact.push_back(fact.back() * v);
  table_ = std::make_shared<const std::vector<Rational>>(std::move(table));
  fact_ = std::make_shared<const std::vector<Rational>>(std::move(fact));
}

PsiSequence PsiSequence::classical(int cap) {
  std::vector<Rational> t;
  for (int n = 1; n <= cap; ++n) t.emplace_back(n);
  return PsiSequence(Kind::Classical, 1, std::move(t), true, "classical");
}

PsiSequence PsiSequence::q_deformed(const Rational& q, int cap) {
  if (q == 1) throw Error(ErrorKind::InvalidQ, "q = 1 is the classical sequence");
  std::vector<Rational> t;
  for (int n = 1; n <= cap; ++n) t.push_back(q_integer(q, n));
  return PsiSequence(Kind::QDeformed, q, std::move(t), true, "q:" + to_string(q));
}

PsiSequence PsiSequence::custom(std::vector<Rational> values, std::string label) {
  return PsiSequence(Kind::Custom, 1, std::move(values), false, std::move(label));
}

PsiSequence PsiSequence::custom(const std::function<Rational(int)>& rule, int cap, std::string label) {
  std::vector<Rational> t;
  for (int n = 1; n <= cap; ++n) t.push_back(rule(n));
  return PsiSequence(Kind::Custom, 1, std::move(t), false, std::move(label));
}

PsiSequence PsiSequence::parse_table(std::string_view text, std::string label) {
  std::vector<Rational> values;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    values.push_back(parse_rational(body));
  }
  if (values.empty()) throw Error(ErrorKind::InvalidArgument, "psi table '" + label + "' is empty");
  return custom(std::move(values), std::move(label));
}

PsiSequence PsiSequence::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read psi file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), "file:" + path.string());
}

PsiSequence PsiSequence::from_spec(std::string_view spec, int cap) {
  if (spec == "classical") return classical(cap);
  if (spec.starts_with("q:")) return q_deformed(parse_rational(spec.substr(2)), cap);
  if (spec.starts_with("file:")) return from_file(std::string(spec.substr(5)));
  throw Error(ErrorKind::InvalidArgument, "unknown psi spec '" + std::string(spec) + "'");
}

int PsiSequence::range() const {
  return extendable_ ? std::numeric_limits<int>::max() : static_cast<int>(table_->size());
}

Rational PsiSequence::compute(int n) const {
  if (!extendable_)
    throw Error(ErrorKind::OutOfRange, label_ + " is defined only for n <= " +
                                           std::to_string(table_->size()));
  Rational v = kind_ == Kind::Classical ? Rational(n) : q_integer(q_, n);
  if (v == 0) throw Error(ErrorKind::ZeroPsiValue, "n_psi = 0 at n = " + std::to_string(n), n);
  return v;
}

Rational PsiSequence::value(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative psi index");
  if (n == 0) return 0;
  if (n <= static_cast<int>(table_->size())) return (*table_)[static_cast<std::size_t>(n - 1)];
  return compute(n);
}

Rational PsiSequence::factorial(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative psi index");
  if (n < static_cast<int>(fact_->size())) return (*fact_)[static_cast<std::size_t>(n)];
  Rational out = fact_->back();
  for (int k = static_cast<int>(fact_->size()); k <= n; ++k) out *= value(k);
  return out;
}

Rational PsiSequence::star_coefficient(int n) const { return umbral::factorial(n) / factorial(n); }

bool operator==(const PsiSequence& a, const PsiSequence& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case PsiSequence::Kind::Classical: return true;
    case PsiSequence::Kind::QDeformed: return a.q_ == b.q_;
    case PsiSequence::Kind::Custom: return a.table_ == b.table_ || *a.table_ == *b.table_;
  }
  return false;
}

}  // namespace umbral
