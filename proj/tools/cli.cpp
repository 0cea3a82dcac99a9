#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "umbral/error.hpp"
#include "umbral/expansions.hpp"
#include "umbral/expression.hpp"
#include "umbral/identities.hpp"
#include "umbral/integration.hpp"
#include "umbral/psi_sequence.hpp"
#include "umbral/star_product.hpp"
#include "umbral/transport.hpp"

namespace umbral::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for option values that parse but are not valid for the command.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int degree_cap() {
  if (const char* env = std::getenv("PSI_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PSI_CAP must be a positive integer, got '") + env + "'");
  }
  return PsiSequence::kDefaultCap;
}

/// Shortest text that reads back as the same double.
std::string decimal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::int64_t integer_option(const std::string& name, const std::string& text) {
  const Rational r = parse_rational(text);
  if (!is_integer(r)) throw UsageError(name + " must be an integer, got " + text);
  return to_int64(r);
}

RationalPolynomial parse_fn(const std::string& text, int cap) {
  RationalPolynomial f = parse_expression(text);
  if (f.degree() > cap)
    throw Error(ErrorKind::CapExceeded, "function degree " + std::to_string(f.degree()) + " exceeds PSI_CAP " +
                                            std::to_string(cap));
  return f;
}

void emit_flat(const Json& j, const std::string& prefix, std::ostream& out, char sep) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      emit_flat(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out, sep);
  } else if (j.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) joined += " ";
      joined += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
    }
    out << prefix << sep << joined << "\n";
  } else {
    out << prefix << sep << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  const char sep = format == "csv" ? ',' : '\t';
  if (!doc.contains("rows")) {
    emit_flat(doc, "", out, sep);
    return;
  }
  bool header = true;
  for (const auto& row : doc["rows"]) {
    std::string names, values;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!names.empty()) {
        names += sep;
        values += sep;
      }
      names += it.key();
      values += it->is_string() ? it->get<std::string>() : it->dump();
    }
    if (header) out << names << "\n";
    header = false;
    out << values << "\n";
  }
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["suite"] = v.id;
  j["pass"] = v.pass;
  j["cases"] = v.cases;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.counterexample) {
    const Counterexample& c = *v.counterexample;
    j["counterexample"] = {{"input", render(c.input)},
                           {"degree", c.degree},
                           {"lhs", render(c.lhs)},
                           {"rhs", render(c.rhs)}};
  }
  return j;
}

struct Common {
  std::string format = "json";
  std::string psi = "classical";
};

struct ExpandOptions {
  std::string engine, fn, alpha = "0", point = "0", center = "0";
  int order = 0;
  std::optional<int> grid_last;
};

int run_expand(const ExpandOptions& o, const Common& c, std::ostream& out) {
  const int cap = degree_cap();
  const RationalPolynomial f = parse_fn(o.fn, cap);
  const Rational alpha = parse_rational(o.alpha);
  const Rational point = parse_rational(o.point);
  const Rational center = parse_rational(o.center);
  if (o.order < 0) throw UsageError("--order must be >= 0");

  Json inputs;
  inputs["engine"] = o.engine;
  inputs["fn"] = render(f);
  inputs["alpha"] = to_string(alpha);
  inputs["point"] = to_string(point);
  inputs["order"] = o.order;

  ExpansionReport r;
  if (o.engine == "classical") {
    r = classical_bt(f, alpha, point, o.order);
  } else if (o.engine == "delta") {
    const std::int64_t x = integer_option("--point", o.point);
    if (o.grid_last) {
      inputs["grid"] = "0.." + std::to_string(*o.grid_last);
      r = delta_bt(GridFunction::sample(f, 0, *o.grid_last), x, o.order);
    } else {
      r = delta_bt(f, x, o.order);
    }
  } else if (o.engine == "maclaurin") {
    const std::int64_t a = integer_option("--alpha", o.alpha);
    if (o.grid_last) {
      inputs["grid"] = "0.." + std::to_string(*o.grid_last);
      r = maclaurin_bt(GridFunction::sample(f, 0, *o.grid_last), a, o.order);
    } else {
      r = maclaurin_bt(f, a, o.order);
    }
  } else if (o.engine == "psi") {
    const PsiSequence psi = PsiSequence::from_spec(c.psi, cap);
    inputs["psi"] = psi.label();
    inputs["center"] = to_string(center);
    r = psi_bt(f, alpha, point, o.order, psi, center);
  } else {
    throw UsageError("unknown engine '" + o.engine + "'");
  }

  Json result;
  result["engine"] = r.engine;
  result["terms"] = rationals(r.terms);
  result["remainder"] = to_string(r.remainder);
  result["reconstruction"] = to_string(r.reconstruction);
  result["target"] = to_string(r.target);
  result["targetLabel"] = r.target_label;
  if (r.engine == "psi") result["termsAtPoint"] = rationals(r.terms_at_point);

  Json doc;
  doc["command"] = "expand";
  doc["inputs"] = inputs;
  doc["result"] = result;
  doc["residual"] = to_string(r.residual);
  emit(doc, c.format, out);
  return r.residual == 0 ? kOk : kCheckFailed;
}

struct VerifyOptions {
  std::string suite, rep = "psi", center = "0", alpha = "0", pair = "integral", basis = "monomial";
  std::string beta = "1";
  int degree = 10;
  int order = 6;
  int cases = 100;
  std::uint64_t seed = 2024;
  bool printed_lowering = false;
};

bool is_star_axiom(const std::string& s) {
  return s == "obs-a" || s == "obs-c" || s == "obs-d" || s == "obs-e" || s == "leibniz" || s == "obs-f" ||
         s == "star-power-law" || s == "non-associativity";
}

int run_verify(const VerifyOptions& o, const Common& c, std::ostream& out) {
  const int cap = degree_cap();
  if (o.degree < 0 || o.degree > cap) throw UsageError("--degree must lie in 0..PSI_CAP");
  if (o.order < 0) throw UsageError("--order must be >= 0");
  const PsiSequence psi = PsiSequence::from_spec(c.psi, cap);

  Json inputs;
  inputs["suite"] = o.suite;
  inputs["psi"] = psi.label();
  inputs["degree"] = o.degree;

  Verdict v;
  if (is_star_axiom(o.suite)) {
    StarAxiomParams p;
    p.psi = psi;
    p.alpha = parse_rational(o.alpha);
    p.beta = parse_rational(o.beta);
    p.cases = o.cases;
    p.seed = o.seed;
    inputs["cases"] = o.cases;
    v = verify_star_axiom(o.suite, p, o.degree);
  } else if (o.suite.starts_with("transport-")) {
    const std::string suite = o.suite.substr(10);
    const GradedBasis basis = GradedBasis::from_spec(o.basis, o.degree + o.order + 2);
    inputs["basis"] = basis.label();
    inputs["convention"] = o.printed_lowering ? "printed" : "psi-graded";
    const TransportedCalculus t = transport_calculus(
        basis, psi, o.printed_lowering ? TransportConvention::Printed : TransportConvention::PsiGraded);
    v = verify_transported(t, suite, o.degree, o.order, o.cases);
  } else if (o.suite == "telescoping-grid") {
    inputs["order"] = o.order;
    v = verify_telescoping_grid(o.order, o.degree);
  } else {
    IdentityParams p;
    p.psi = psi;
    p.representation = parse_representation(o.rep);
    if (o.pair == "integral")
      p.pair = IntegrationPair::Integral;
    else if (o.pair == "summation")
      p.pair = IntegrationPair::Summation;
    else
      throw UsageError("unknown --pair '" + o.pair + "'");
    p.center = parse_rational(o.center);
    p.alpha = parse_rational(o.alpha);
    p.order = o.order;
    inputs["rep"] = o.rep;
    inputs["center"] = to_string(p.center);
    inputs["order"] = o.order;
    v = verify_identity(o.suite, p, o.degree);
  }

  Json doc;
  doc["command"] = "verify";
  doc["inputs"] = inputs;
  doc["result"] = verdict_json(v);
  doc["residual"] = v.pass || !v.counterexample ? std::string(v.pass ? "0" : "nonzero")
                                                 : render(v.counterexample->lhs - v.counterexample->rhs);
  emit(doc, c.format, out);
  return v.pass ? kOk : kCheckFailed;
}

struct IntegrateOptions {
  std::string mode = "symbolic", fn, from = "0", to = "1", center = "0";
  std::optional<std::string> q;
  std::optional<double> eps;
  std::optional<int> terms;
};

int run_integrate(const IntegrateOptions& o, const Common& c, std::ostream& out) {
  const int cap = degree_cap();
  const RationalPolynomial f = parse_fn(o.fn, cap);
  const Rational from = parse_rational(o.from);
  const Rational to = parse_rational(o.to);

  Json inputs;
  inputs["mode"] = o.mode;
  inputs["fn"] = render(f);
  inputs["from"] = to_string(from);
  inputs["to"] = to_string(to);

  Json doc;
  doc["command"] = "integrate";
  int code = kOk;
  if (o.mode == "symbolic") {
    const PsiSequence psi = o.q ? PsiSequence::q_deformed(parse_rational(*o.q), cap)
                                : PsiSequence::from_spec(c.psi, cap);
    const Rational center = parse_rational(o.center);
    inputs["psi"] = psi.label();
    inputs["center"] = to_string(center);
    const Rational value = psi_integrate(f, psi, from, to, center);
    doc["inputs"] = inputs;
    doc["result"] = {{"mode", "symbolic"},
                     {"value", to_string(value)},
                     {"decimal", decimal(to_double(value))},
                     {"antiderivative", render(psi_antiderivative(f, psi, center))}};
    doc["residual"] = "0";
  } else if (o.mode == "jackson") {
    if (!o.q) throw UsageError("jackson mode needs --q");
    if (o.eps.has_value() == o.terms.has_value()) throw UsageError("jackson mode needs exactly one of --eps, --terms");
    const Rational q = parse_rational(*o.q);
    inputs["q"] = to_string(q);
    if (o.eps) inputs["eps"] = decimal(*o.eps);
    if (o.terms) inputs["terms"] = *o.terms;
    const QuadratureResult exact = jackson_symbolic(f, q, from, to);
    const QuadratureResult numeric = jackson_numeric(f, q, from, to, JacksonStop{o.eps, o.terms});
    const double error = numeric.value - to_double(exact.exact);
    doc["inputs"] = inputs;
    doc["result"] = {{"mode", "jackson"},
                     {"value", decimal(numeric.value)},
                     {"tailBound", decimal(numeric.tail_bound)},
                     {"termsUsed", numeric.terms_used},
                     {"exact", to_string(exact.exact)}};
    doc["residual"] = decimal(error);
    if (std::abs(error) > numeric.tail_bound) code = kCheckFailed;
  } else {
    throw UsageError("unknown --mode '" + o.mode + "'");
  }
  emit(doc, c.format, out);
  return code;
}

struct StarOptions {
  std::string lhs = "x", rhs = "1";
  std::optional<int> power;
};

int run_star(const StarOptions& o, const Common& c, std::ostream& out) {
  const int cap = degree_cap();
  const PsiSequence psi = PsiSequence::from_spec(c.psi, cap);
  const RationalPolynomial g = parse_fn(o.rhs, cap);
  Json inputs;
  inputs["psi"] = psi.label();
  RationalPolynomial product;
  if (o.power) {
    if (*o.power < 0) throw UsageError("--power must be >= 0");
    if (*o.power + std::max(g.degree(), 0) > cap) throw Error(ErrorKind::CapExceeded, "star power exceeds PSI_CAP");
    inputs["power"] = *o.power;
    inputs["rhs"] = render(g);
    product = star_power(*o.power, psi, g);
  } else {
    const RationalPolynomial f = parse_fn(o.lhs, cap);
    inputs["lhs"] = render(f);
    inputs["rhs"] = render(g);
    product = star(f, g, psi, cap);
  }
  Json doc;
  doc["command"] = "star";
  doc["inputs"] = inputs;
  doc["result"] = {{"product", render(product)}, {"coefficients", rationals(product.coeffs())}};
  doc["residual"] = "0";
  emit(doc, c.format, out);
  return kOk;
}

int run_table(int upto, const Common& c, std::ostream& out) {
  const int cap = degree_cap();
  if (upto < 0) throw UsageError("--upto must be >= 0");
  const PsiSequence psi = PsiSequence::from_spec(c.psi, std::max(cap, upto));
  Json rows = Json::array();
  for (int n = 0; n <= upto; ++n)
    rows.push_back({{"n", n},
                    {"n_psi", to_string(psi.value(n))},
                    {"psi_factorial", to_string(psi.factorial(n))},
                    {"star_coefficient", to_string(psi.star_coefficient(n))}});
  Json doc;
  doc["command"] = "table";
  doc["inputs"] = {{"psi", psi.label()}, {"upto", upto}};
  doc["rows"] = rows;
  doc["residual"] = "0";
  emit(doc, c.format, out);
  return kOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--psi", c.psi, "classical | q:P/Q | file:PATH");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact psi-umbral calculus: Bernoulli-Taylor expansions and operator identities", "umbral"};
  app.require_subcommand(1);

  Common common;

  ExpandOptions expand;
  auto* expand_cmd = app.add_subcommand("expand", "Run a Bernoulli-Taylor engine");
  add_common(expand_cmd, common);
  expand_cmd->add_option("--engine", expand.engine)
      ->required()
      ->check(CLI::IsMember({"classical", "delta", "maclaurin", "psi"}));
  expand_cmd->add_option("--fn", expand.fn, "Polynomial in x")->required();
  expand_cmd->add_option("--alpha", expand.alpha, "Base point");
  expand_cmd->add_option("--point", expand.point, "Evaluation point");
  expand_cmd->add_option("--order", expand.order, "Expansion order n")->required();
  expand_cmd->add_option("--center", expand.center, "Center of the psi operators");
  expand_cmd->add_option("--grid", expand.grid_last, "Sample fn on 0..LAST and expand the grid function");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity or axiom suite exactly");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--suite", verify.suite)->required();
  verify_cmd->add_option("--degree", verify.degree, "Check monomials up to this degree");
  verify_cmd->add_option("--order", verify.order, "Highest order n for Bernoulli/telescoping identities");
  verify_cmd->add_option("--rep", verify.rep)->check(CLI::IsMember({"classical", "delta", "psi", "falling", "mixed"}));
  verify_cmd->add_option("--center", verify.center);
  verify_cmd->add_option("--alpha", verify.alpha);
  verify_cmd->add_option("--beta", verify.beta);
  verify_cmd->add_option("--pair", verify.pair)->check(CLI::IsMember({"integral", "summation"}));
  verify_cmd->add_option("--basis", verify.basis, "monomial | falling | shifted:C | file:PATH");
  verify_cmd->add_flag("--printed-lowering", verify.printed_lowering, "Transport with Q q_n = n q_{n-1}");
  verify_cmd->add_option("--cases", verify.cases);
  verify_cmd->add_option("--seed", verify.seed);

  IntegrateOptions integrate;
  auto* integrate_cmd = app.add_subcommand("integrate", "psi-integration and Jackson quadrature");
  add_common(integrate_cmd, common);
  integrate_cmd->add_option("--mode", integrate.mode)->check(CLI::IsMember({"symbolic", "jackson"}));
  integrate_cmd->add_option("--q", integrate.q);
  integrate_cmd->add_option("--from", integrate.from);
  integrate_cmd->add_option("--to", integrate.to);
  integrate_cmd->add_option("--fn", integrate.fn)->required();
  integrate_cmd->add_option("--center", integrate.center);
  auto* eps_opt = integrate_cmd->add_option("--eps", integrate.eps);
  auto* terms_opt = integrate_cmd->add_option("--terms", integrate.terms);
  eps_opt->excludes(terms_opt);

  StarOptions star_opts;
  auto* star_cmd = app.add_subcommand("star", "psi-product f *_psi g, or right-nested star powers");
  add_common(star_cmd, common);
  star_cmd->add_option("--lhs", star_opts.lhs);
  star_cmd->add_option("--rhs", star_opts.rhs);
  star_cmd->add_option("--power", star_opts.power);

  int upto = 8;
  auto* table_cmd = app.add_subcommand("table", "Tabulate n_psi, n_psi! and n!/n_psi!");
  add_common(table_cmd, common);
  table_cmd->add_option("--upto", upto);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (expand_cmd->parsed()) return run_expand(expand, common, out);
    if (verify_cmd->parsed()) return run_verify(verify, common, out);
    if (integrate_cmd->parsed()) return run_integrate(integrate, common, out);
    if (star_cmd->parsed()) return run_star(star_opts, common, out);
    if (table_cmd->parsed()) return run_table(upto, common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Every library error means the inputs cannot be run as given.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace umbral::cli
