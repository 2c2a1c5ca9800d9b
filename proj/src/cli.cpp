#include "dinfty/cli.hpp"

#include "dinfty/hopf_checks.hpp"
#include "dinfty/suites.hpp"
#include "dinfty/tableaux.hpp"
#include "dinfty/vandermonde.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace dinfty::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long kMaxMnWithoutForce = 14;
constexpr long kMaxRWithoutForce = 6;

long require(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

BigRat lambda_or(const RunConfig& cfg, const char* fallback) {
  try {
    return parse_rat(cfg.lambda.value_or(fallback));
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --lambda: ") + e.what());
  }
}

void check_mn(const RunConfig& cfg, long& m, long& n) {
  m = require(cfg.m, "--m");
  n = require(cfg.n, "--n");
  if (m < 1 || n < 1) throw UsageError("--m and --n must be >= 1");
  if (m + n > kMaxMnWithoutForce && !cfg.force)
    throw UsageError("refusing m + n = " + std::to_string(m + n) + " > " + std::to_string(kMaxMnWithoutForce) +
                     ": the subset count C(m+n, m) makes this slow; pass --force to run anyway");
}

const char* flag(bool b) { return b ? "true" : "false"; }

// Shared writer for lists of CheckResults.
int emit_checks(const RunConfig& cfg, const std::string& command, const std::vector<CheckResult>& results,
                std::ostream& out) {
  const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  switch (cfg.output) {
    case OutputFormat::Json: {
      nlohmann::json j = {{"command", command}, {"results", nlohmann::json::array()}, {"all_passed", all}};
      for (const auto& r : results) j["results"].push_back(to_json(r));
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "check,status,params\n";
      for (const auto& r : results)
        out << r.check << ',' << (r.passed ? "pass" : "fail") << ",\"" << r.params.dump() << "\"\n";
      break;
    case OutputFormat::Pretty:
      for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.check << ' ' << r.params.dump() << '\n';
        if (r.witness) out << "     witness: " << r.witness->dump() << '\n';
      }
      out << (all ? "all checks passed" : "some checks FAILED") << '\n';
      break;
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_theorem1(const RunConfig& cfg, std::ostream& out) {
  long m = 0, n = 0;
  check_mn(cfg, m, n);
  struct Row {
    long t, t_star;
    BigInt lhs, rhs, binom;
    bool match;
  };
  std::vector<Row> rows;
  for (long t = min_subset_sum(m); t <= max_subset_sum(m, n); ++t) {
    Row row{t, t - min_subset_sum(m), theorem1_lhs(m, n, t), theorem1_rhs(m, n, t), 0, false};
    row.binom = binomial(m * n, row.t_star);
    row.match = row.lhs == row.rhs;
    rows.push_back(std::move(row));
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match; });
  switch (cfg.output) {
    case OutputFormat::Csv:
      out << "t,t_star,lhs,rhs,match\n";
      for (const auto& r : rows)
        out << r.t << ',' << r.t_star << ',' << r.lhs << ',' << r.rhs << ',' << flag(r.match) << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json j = {{"command", "theorem1"}, {"m", m}, {"n", n}, {"rows", nlohmann::json::array()}};
      for (const auto& r : rows)
        j["rows"].push_back({{"t", r.t},
                             {"t_star", r.t_star},
                             {"lhs", to_string(r.lhs)},
                             {"rhs", to_string(r.rhs)},
                             {"binomial", to_string(r.binom)},
                             {"match", r.match}});
      j["all_match"] = all;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Pretty:
      out << "sum V_X V_Y  vs  G(m+1) G(n+1) C(mn, t*)   (m=" << m << ", n=" << n << ")\n";
      out << std::setw(6) << "t" << std::setw(6) << "t*" << std::setw(24) << "lhs" << std::setw(24) << "rhs"
          << std::setw(16) << "C(mn,t*)" << "  match\n";
      for (const auto& r : rows)
        out << std::setw(6) << r.t << std::setw(6) << r.t_star << std::setw(24) << r.lhs << std::setw(24) << r.rhs
            << std::setw(16) << r.binom << "  " << flag(r.match) << '\n';
      break;
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  long m = 0, n = 0;
  check_mn(cfg, m, n);
  std::map<long, BigInt> values;
  for (long t = min_subset_sum(m); t <= max_subset_sum(m, n); ++t) values[t] = discrete_gamma_sq(m, n, t);
  bool all = true;
  if (cfg.output == OutputFormat::Csv) out << "t,t_star,sum_vx_sq,reflected_t,symmetric\n";
  nlohmann::json j = {{"command", "gamma"}, {"m", m}, {"n", n}, {"rows", nlohmann::json::array()}};
  if (cfg.output == OutputFormat::Pretty)
    out << "sum V_X^2 over m-subsets of {1..m+n} with sum t   (m=" << m << ", n=" << n << ")\n"
        << std::setw(6) << "t" << std::setw(6) << "t*" << std::setw(28) << "sum V_X^2" << std::setw(8) << "t'"
        << "  symmetric\n";
  for (const auto& [t, v] : values) {
    const long reflected = m * (m + n + 1) - t;
    const bool sym = values.at(reflected) == v;
    all = all && sym;
    const long t_star = t - min_subset_sum(m);
    switch (cfg.output) {
      case OutputFormat::Csv:
        out << t << ',' << t_star << ',' << v << ',' << reflected << ',' << flag(sym) << '\n';
        break;
      case OutputFormat::Json:
        j["rows"].push_back({{"t", t},
                             {"t_star", t_star},
                             {"sum_vx_sq", to_string(v)},
                             {"reflected_t", reflected},
                             {"symmetric", sym}});
        break;
      case OutputFormat::Pretty:
        out << std::setw(6) << t << std::setw(6) << t_star << std::setw(28) << v << std::setw(8) << reflected << "  "
            << flag(sym) << '\n';
        break;
    }
  }
  if (cfg.output == OutputFormat::Json) {
    j["all_symmetric"] = all;
    out << j.dump(2) << '\n';
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_corollary(const RunConfig& cfg, std::ostream& out) {
  const long m = require(cfg.m, "--m");
  if (m < 1 || m > 6) throw UsageError("--m must be in [1, 6] for corollary (matrix size 2m)");
  const auto res = hopf::corollary_check(static_cast<unsigned>(m));
  switch (cfg.output) {
    case OutputFormat::Json:
      out << nlohmann::json{{"command", "corollary"},
                            {"m", m},
                            {"computed", to_json(res.computed)},
                            {"expected", to_json(res.expected)},
                            {"computed_text", res.computed.to_string()},
                            {"match", res.match}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::Csv:
      out << "m,match,computed,expected\n"
          << m << ',' << flag(res.match) << ",\"" << res.computed.to_string() << "\",\"" << res.expected.to_string()
          << "\"\n";
      break;
    case OutputFormat::Pretty: {
      const BigInt g = barnes_g(static_cast<unsigned>(m + 1));
      out << "det A (2m x 2m, m=" << m << ") = " << res.computed.to_string() << '\n'
          << "G(m+1)^2 (x^-1 - x)^(m^2) with G(m+1)^2 = " << g * g << ":\n"
          << "                        " << res.expected.to_string() << '\n'
          << "match: " << flag(res.match) << '\n';
      break;
    }
  }
  return res.match ? kExitOk : kExitMismatch;
}

std::string ssyt_text(const Ssyt& t) {
  if (t.rows.empty()) return "  (empty)\n";
  std::ostringstream s;
  for (const auto& row : t.rows) {
    s << ' ';
    for (long v : row) s << ' ' << v;
    s << '\n';
  }
  return s.str();
}

int cmd_rsk(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.matrix) throw UsageError("missing required flag --matrix (rows of 0/1 separated by '/')");
  ZeroOneMatrix mat(1, 1);
  try {
    mat = ZeroOneMatrix::parse(*cfg.matrix);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --matrix: ") + e.what());
  }
  const auto [p, q] = dual_rsk(mat);
  const bool ok = p.valid() && q.valid() && q.shape == p.shape.transpose() &&
                  p.shape.size() == static_cast<long>(mat.ones_count());
  switch (cfg.output) {
    case OutputFormat::Json:
      out << nlohmann::json{{"command", "rsk"},
                            {"matrix", *cfg.matrix},
                            {"n", mat.rows()},
                            {"m", mat.cols()},
                            {"ones", mat.ones_count()},
                            {"P", to_json(p)},
                            {"Q", to_json(q)},
                            {"shape_check", ok}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::Csv:
      out << "n,m,ones,shape_P,shape_Q,shape_check\n"
          << mat.rows() << ',' << mat.cols() << ',' << mat.ones_count() << ",\"" << to_string(p.shape) << "\",\""
          << to_string(q.shape) << "\"," << flag(ok) << '\n';
      break;
    case OutputFormat::Pretty:
      out << "matrix " << mat.rows() << "x" << mat.cols() << " with " << mat.ones_count() << " ones\n"
          << "P (entries <= " << mat.cols() << "), shape " << to_string(p.shape) << ":\n"
          << ssyt_text(p) << "Q (entries <= " << mat.rows() << "), shape " << to_string(q.shape) << ":\n"
          << ssyt_text(q) << "shape(Q) = shape(P)^T: " << flag(ok) << '\n';
      break;
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out) { return emit_checks(cfg, "lemmas", default_lemma_suite(), out); }

const std::vector<BigRat>& generator_lambdas() {
  static const std::vector<BigRat> v{2, BigRat(1, 2), -1, BigRat(3, 5)};
  return v;
}

const std::vector<BigRat>& random_lambdas() {
  static const std::vector<BigRat> v{2, BigRat(1, 2), 3, BigRat(1, 3), -2, BigRat(5, 7)};
  return v;
}

CheckResult axiom_check(const std::string& name, const std::vector<hopf::AbstractHopfElem>& sample,
                        nlohmann::json params) {
  const auto report = hopf::hopf_axiom_suite(sample);
  params["sample_size"] = report.checked;
  CheckResult r{name, std::move(params), report.passed(), {}};
  if (!report.passed())
    r.witness = {{"index", report.first_failure->index},
                 {"element", hopf::to_string(sample[report.first_failure->index])},
                 {"axiom", report.first_failure->axiom}};
  return r;
}

int cmd_hopf(const RunConfig& cfg, std::ostream& out) {
  using namespace hopf;
  const std::string& verb = cfg.hopf_verb;
  if (cfg.window < 1) throw UsageError("--window must be >= 1");
  std::vector<CheckResult> results;

  if (verb == "axioms") {
    results.push_back(axiom_check("hopf_axioms_generators", generator_sample(generator_lambdas()), {}));
    results.push_back(axiom_check("hopf_axioms_random_monomials",
                                  random_monomials(50, 3, random_lambdas(), cfg.seed),
                                  {{"seed", cfg.seed}, {"max_a", 3}}));
  } else if (verb == "pairing") {
    const BigRat lam = lambda_or(cfg, "2");
    if (lam == 0) throw UsageError("--lambda must be nonzero");
    std::vector<Generator> gens{Generator::E, Generator::Phi, Generator::Psi};
    if (cfg.gen) {
      try {
        gens = {parse_generator(*cfg.gen)};
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    for (const auto g : gens) {
      results.push_back(coproduct_pairing_check(g, cfg.window, lam));
      results.push_back(antipode_pairing_check(g, cfg.window, lam));
    }
    results.push_back(pointwise_product_check(theta(abstract_generator(gens.front(), lam)), dual_Psi(lam), cfg.window));
  } else if (verb == "rank") {
    const long r = require(cfg.r, "--r");
    if (r < 1) throw UsageError("--r must be >= 1");
    if (r > kMaxRWithoutForce && !cfg.force) throw UsageError("refusing r > 6 without --force");
    const BigRat lam = lambda_or(cfg, "2");
    if (lam == 0) throw UsageError("--lambda must be nonzero");
    const auto rank = quotient_dual_rank(lam, static_cast<unsigned>(r));
    if (rank.note && (lam == 1 || lam == -1))
      throw UsageError("lambda = " + to_string(lam) + " is degenerate: rank " + std::to_string(rank.rank) + "/" +
                       std::to_string(rank.expected) + "; " + *rank.note);
    CheckResult rr{"quotient_dual_rank",
                   {{"r", r}, {"lambda", to_string(lam)}, {"rank", rank.rank}, {"expected", rank.expected}},
                   rank.rank == rank.expected,
                   {}};
    if (rank.note) rr.witness = {{"note", *rank.note}};
    results.push_back(rr);
    const BigRat det = evaluation_matrix_det(lam, static_cast<unsigned>(r));
    const BigRat expected = evaluation_matrix_expected(lam, static_cast<unsigned>(r));
    CheckResult dr{"evaluation_matrix_det",
                   {{"r", r}, {"lambda", to_string(lam)}, {"det", to_string(det)}, {"expected", to_string(expected)}},
                   det == expected,
                   {}};
    results.push_back(dr);
  } else if (verb == "stirling") {
    const long t_max = cfg.t.value_or(10);
    if (t_max < 0 || t_max > 40) throw UsageError("--t must be in [0, 40]");
    CheckResult sr{"stirling_vanishing", {{"max_t", t_max}}, true, {}};
    for (unsigned t = 0; t <= static_cast<unsigned>(t_max) && sr.passed; ++t)
      for (unsigned s = 0; s <= t; ++s) {
        const BigInt v = stirling_vanishing(s, t);
        const BigInt want = s < t ? BigInt(0) : factorial(t);
        if (v != want) {
          sr.passed = false;
          sr.witness = {{"s", s}, {"t", t}, {"value", to_string(v)}, {"expected", to_string(want)}};
          break;
        }
      }
    results.push_back(sr);
  } else if (verb == "vanish") {
    const long r = require(cfg.r, "--r");
    if (r < 1) throw UsageError("--r must be >= 1");
    if (r > kMaxRWithoutForce && !cfg.force) throw UsageError("refusing r > 6 without --force");
    const BigRat lam = lambda_or(cfg, "2");
    if (lam == 0) throw UsageError("--lambda must be nonzero");
    std::vector<Kind> kinds{Kind::Phi, Kind::Psi};
    if (cfg.kind) {
      if (*cfg.kind == "Phi")
        kinds = {Kind::Phi};
      else if (*cfg.kind == "Psi")
        kinds = {Kind::Psi};
      else
        throw UsageError("--kind must be Phi or Psi");
    }
    std::vector<long> powers;
    if (cfg.s) {
      if (*cfg.s < 0) throw UsageError("--s must be >= 0");
      powers = {*cfg.s};
    } else {
      for (long s = 0; s < r; ++s) powers.push_back(s);
    }
    for (const auto kind : kinds)
      for (const BigRat& l : {lam, BigRat(BigRat(1) / lam)})
        for (long s : powers)
          results.push_back(ideal_vanishing_check(kind, static_cast<unsigned>(s), l, static_cast<unsigned>(r)));
  } else {
    throw UsageError("unknown hopf verb '" + verb + "' (expected axioms, pairing, rank, stirling or vanish)");
  }
  return emit_checks(cfg, "hopf " + verb, results, out);
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
  const SubsetX x134({1, 3, 4}, 3, 1);
  const auto arrays = enumerate_triangular_arrays(x134);
  const TriangularArray worked{{{5, 7, 7}, {3, 5}, {1}}};
  const Ssyt mapped = array_to_ssyt(worked);
  const Shape s533({5, 3, 3});
  nlohmann::json riemann = nlohmann::json::array();
  for (long big_n : {4L, 40L, 400L})
    riemann.push_back({{"m", 2}, {"c", "1"}, {"N", big_n}, {"value", to_string(riemann_gamma_demo(2, 1, big_n))}});

  if (cfg.output == OutputFormat::Json) {
    nlohmann::json j = {{"command", "demo"}};
    j["arrays_for_X_134"] = nlohmann::json::array();
    for (const auto& a : arrays) j["arrays_for_X_134"].push_back(to_json(a));
    j["vandermonde_X_134"] = to_string(vandermonde(x134));
    j["array_to_ssyt"] = {{"array", to_json(worked)}, {"ssyt", to_json(mapped)}};
    j["transpose"] = {{"shape", s533.parts()}, {"transpose", s533.transpose().parts()}};
    j["riemann_gamma"] = riemann;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "X = {1,3,4}: V_X = " << vandermonde(x134) << ", G(4) = " << barnes_g(4) << ", arrays:\n";
  for (const auto& a : arrays) out << "  " << to_json(a).dump() << '\n';
  out << "array " << to_json(worked).dump() << " -> SSYT " << to_json(mapped).dump() << '\n';
  out << "transpose of " << to_string(s533) << " = " << to_string(s533.transpose()) << '\n';
  out << "lattice approximation of the normalized gamma integral, m = 2, c = 1 (demo only):\n";
  for (const auto& row : riemann) out << "  N = " << row["N"] << ": " << row["value"].get<std::string>() << '\n';
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "theorem1") return cmd_theorem1(cfg, out);
  if (cfg.command == "gamma") return cmd_gamma(cfg, out);
  if (cfg.command == "corollary") return cmd_corollary(cfg, out);
  if (cfg.command == "rsk") return cmd_rsk(cfg, out);
  if (cfg.command == "lemmas") return cmd_lemmas(cfg, out);
  if (cfg.command == "hopf") return cmd_hopf(cfg, out);
  if (cfg.command == "demo") return cmd_demo(cfg, out);
  throw UsageError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Vandermonde sum identities and the finite dual of the infinite dihedral group algebra",
               "dinfty"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  long m = 0, n = 0, t = 0, r = 0, s = 0;
  std::string lambda, matrix, gen, kind, output = "pretty";
  auto* om = app.add_option("--m", m, "size of X");
  auto* on = app.add_option("--n", n, "size of the complement Y");
  auto* ot = app.add_option("--t", t, "target sum (stirling: largest t)");
  auto* orr = app.add_option("--r", r, "multiplicity r of the roots lambda, 1/lambda");
  auto* os = app.add_option("--s", s, "power of E");
  auto* ol = app.add_option("--lambda", lambda, "rational lambda as p/q");
  auto* omat = app.add_option("--matrix", matrix, "0-1 matrix, rows separated by '/'");
  auto* ogen = app.add_option("--gen", gen, "generator: E, Phi or Psi");
  auto* okind = app.add_option("--kind", kind, "functional kind: Phi or Psi");
  app.add_option("--window", cfg.window, "pairing window N (|i| <= N)");
  app.add_option("--output", output, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--seed", cfg.seed, "seed for randomized sampling");
  app.add_flag("--force", cfg.force, "lift size guardrails");

  for (const char* name : {"theorem1", "gamma", "corollary", "rsk", "lemmas", "demo"})
    app.add_subcommand(name, "")->callback([&cfg, name] { cfg.command = name; });
  app.get_subcommand("theorem1")->description("table of sum V_X V_Y against the closed form");
  app.get_subcommand("gamma")->description("table of sum V_X^2 with the reflection symmetry");
  app.get_subcommand("corollary")->description("symbolic determinant of the 2m x 2m matrix");
  app.get_subcommand("rsk")->description("dual RSK on a 0-1 matrix");
  app.get_subcommand("lemmas")->description("exhaustive lemma sweeps");
  app.get_subcommand("demo")->description("worked examples");
  auto* hopf_cmd = app.add_subcommand("hopf", "finite dual checks");
  hopf_cmd->require_subcommand(1);
  for (const char* verb : {"axioms", "pairing", "rank", "stirling", "vanish"})
    hopf_cmd->add_subcommand(verb, "")->callback([&cfg, verb] {
      cfg.command = "hopf";
      cfg.hopf_verb = verb;
    });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*om) cfg.m = m;
  if (*on) cfg.n = n;
  if (*ot) cfg.t = t;
  if (*orr) cfg.r = r;
  if (*os) cfg.s = s;
  if (*ol) cfg.lambda = lambda;
  if (*omat) cfg.matrix = matrix;
  if (*ogen) cfg.gen = gen;
  if (*okind) cfg.kind = kind;
  cfg.output = output == "csv" ? OutputFormat::Csv : output == "json" ? OutputFormat::Json : OutputFormat::Pretty;

  try {
    return dispatch(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dinfty::cli
