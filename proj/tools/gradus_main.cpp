// gradus — exact computations in weighted-graded (skew-)commutative rings
// over Q: Hilbert series, Groebner normal forms, ideal membership, exact
// rank, rational-series arithmetic, twisted-kappa rewriting, and the
// built-in verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "gradus/hilbert.hpp"
#include "gradus/kappa.hpp"
#include "gradus/linalg.hpp"
#include "gradus/parse.hpp"
#include "gradus/ringfile.hpp"
#include "gradus/series.hpp"
#include "gradus/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

gradus::MonomialOrder order_from_flag(const std::string& name) {
  auto order = gradus::MonomialOrder::from_name(name);
  if (!order) throw gradus::Error("unknown ordering '" + name + "'");
  return *order;
}

int cmd_hilbert(const std::string& file, bool no_reduce, const std::string& order) {
  gradus::RingFile rf = gradus::load_ring_file(file);
  gradus::RationalSeries h = gradus::hilbert_series(rf.ideal, order_from_flag(order));
  if (!no_reduce) h = gradus::series_reduce(h);
  std::cout << gradus::print_series(h) << "\n";
  return kExitOk;
}

int cmd_nf(const std::string& file, const std::string& expr, const std::string& order) {
  gradus::RingFile rf = gradus::load_ring_file(file);
  gradus::Polynomial p = gradus::parse_poly(rf.ring, expr, &rf.lets);
  gradus::GroebnerBasis gb = gradus::groebner_basis(rf.ideal, order_from_flag(order));
  std::cout << gradus::print_poly(gradus::normal_form(p, gb)) << "\n";
  return kExitOk;
}

int cmd_member(const std::string& file, const std::string& expr) {
  gradus::RingFile rf = gradus::load_ring_file(file);
  gradus::Polynomial p = gradus::parse_poly(rf.ring, expr, &rf.lets);
  bool member = gradus::is_member(p, rf.ideal);
  std::cout << (member ? "true" : "false") << "\n";
  return member ? kExitOk : kExitFalse;
}

int cmd_rank(const std::string& file, const std::string& exprs) {
  gradus::RingFile rf = gradus::load_ring_file(file);
  std::vector<gradus::Polynomial> ps;
  size_t start = 0;
  while (start <= exprs.size()) {
    size_t sep = exprs.find(';', start);
    std::string part = exprs.substr(
        start, sep == std::string::npos ? std::string::npos : sep - start);
    if (part.find_first_not_of(" \t\r\n") != std::string::npos)
      ps.push_back(gradus::parse_poly(rf.ring, part, &rf.lets));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  std::cout << gradus::rank_of_span(ps) << "\n";
  return kExitOk;
}

int cmd_series(const std::string& sub, const std::string& lhs, const std::string& rhs,
               int n) {
  gradus::RationalSeries a = gradus::parse_series(lhs);
  if (sub == "expand") {
    std::vector<gradus::Rational> coeffs = gradus::series_expand(a, n);
    std::string out;
    for (const auto& c : coeffs) {
      if (!out.empty()) out += ",";
      out += c.str();
    }
    std::cout << out << "\n";
    return kExitOk;
  }
  gradus::RationalSeries b = gradus::parse_series(rhs);
  if (sub == "eq") {
    bool eq = gradus::series_eq(a, b);
    std::cout << (eq ? "true" : "false") << "\n";
    return eq ? kExitOk : kExitFalse;
  }
  if (sub == "leq") {
    bool leq = gradus::series_leq(a, b, n);
    std::cout << (leq ? "true" : "false") << "\n";
    return leq ? kExitOk : kExitFalse;
  }
  gradus::RationalSeries out =
      sub == "add" ? gradus::series_add(a, b) : gradus::series_mul(a, b);
  std::cout << gradus::print_series(gradus::series_reduce(out)) << "\n";
  return kExitOk;
}

int cmd_kappa(const std::string& sub, long d, const std::string& expr,
              int vanish_threshold, bool enable_d3) {
  gradus::RewriteOptions opts;
  opts.vanish_threshold = vanish_threshold;
  opts.enable_d3_kappa130 = enable_d3;
  gradus::KappaExpression e = gradus::parse_kappa(expr);
  gradus::Polynomial rewritten = gradus::rewrite_to_generators(e, d, opts);
  std::vector<std::string> residual = gradus::opaque_variables(rewritten);

  if (sub == "rewrite") {
    std::cout << gradus::print_poly(rewritten) << "\n";
    for (const auto& name : residual)
      std::cerr << "warning: unreduced symbol " << name << "\n";
    return kExitOk;
  }
  // nf
  if (!residual.empty()) {
    std::cout << gradus::print_poly(rewritten) << "\n";
    for (const auto& name : residual)
      std::cerr << "warning: unreduced symbol " << name << "\n";
    return kExitFalse;
  }
  std::cout << gradus::print_poly(gradus::kappa_normal_form(e, d, opts)) << "\n";
  return kExitOk;
}

int cmd_verify_paper(bool machine, bool perturb) {
  gradus::SuiteOptions options;
  options.perturb = perturb;
  gradus::SuiteReport report = gradus::run_all(options);
  if (machine) {
    for (const auto& c : report.results) {
      nlohmann::json record = {{"id", c.id},
                               {"status", c.pass ? "pass" : "fail"},
                               {"witness", c.detail}};
      std::cout << record.dump() << "\n";
    }
    nlohmann::json summary = {{"total", report.results.size()},
                              {"failed", report.failed}};
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << gradus::render_report(report);
  }
  return report.failed == 0 ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradus — exact computations in weighted-graded rings over Q"};
  app.require_subcommand(1);

  std::string file, expr, exprs, order = "grevlex", lhs, rhs;
  bool no_reduce = false;
  int n = 100;
  long d = 3;
  int vanish_threshold = 1;
  bool enable_d3 = false;
  bool machine = false;
  bool perturb = false;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of FILE's quotient ring");
  hilbert->add_option("file", file, "ring-spec file")->required();
  hilbert->add_flag("--no-reduce", no_reduce, "print the unreduced series");
  hilbert->add_option("--order", order, "monomial order: grevlex|lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));

  auto* nf = app.add_subcommand("nf", "normal form of an expression modulo FILE's ideal");
  nf->add_option("file", file)->required();
  nf->add_option("--expr", expr, "polynomial expression")->required();
  nf->add_option("--order", order, "monomial order: grevlex|lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));

  auto* member = app.add_subcommand("member", "ideal membership test");
  member->add_option("file", file)->required();
  member->add_option("--expr", expr, "polynomial expression")->required();

  auto* rank = app.add_subcommand("rank", "exact rank of the span of polynomials");
  rank->add_option("file", file)->required();
  rank->add_option("--exprs", exprs, "semicolon-separated expressions")->required();

  auto* series = app.add_subcommand("series", "rational-series arithmetic");
  std::string series_sub;
  series->add_option("sub", series_sub, "eq|leq|expand|add|mul")
      ->required()
      ->check(CLI::IsMember({"eq", "leq", "expand", "add", "mul"}));
  series->add_option("--lhs", lhs, "series literal")->required();
  series->add_option("--rhs", rhs, "series literal");
  series->add_option("--n", n, "truncation bound (leq default 100)");

  auto* kappa = app.add_subcommand("kappa", "twisted-kappa rewriting");
  std::string kappa_sub;
  kappa->add_option("sub", kappa_sub, "rewrite|nf")
      ->required()
      ->check(CLI::IsMember({"rewrite", "nf"}));
  kappa->add_option("--d", d, "bundle degree parameter")->required();
  kappa->add_option("--expr", expr, "kappa expression, e.g. k[-1,0,3]")->required();
  kappa->add_option("--vanish-threshold", vanish_threshold, "1 or 2 (default 1)")
      ->check(CLI::IsMember({1, 2}));
  kappa->add_flag("--enable-d3-kappa130", enable_d3,
                  "enable the d=3 rule for k[-1,3,0]");

  auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
  verify->add_flag("--machine", machine, "one JSON record per check");
  verify->add_flag("--perturb", perturb, "test hook: perturb one relation")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (hilbert->parsed()) return cmd_hilbert(file, no_reduce, order);
    if (nf->parsed()) return cmd_nf(file, expr, order);
    if (member->parsed()) return cmd_member(file, expr);
    if (rank->parsed()) return cmd_rank(file, exprs);
    if (series->parsed()) {
      if (series_sub != "expand" && rhs.empty())
        throw gradus::Error("series " + series_sub + " requires --rhs");
      return cmd_series(series_sub, lhs, rhs, n);
    }
    if (kappa->parsed())
      return cmd_kappa(kappa_sub, d, expr, vanish_threshold, enable_d3);
    if (verify->parsed()) return cmd_verify_paper(machine, perturb);
  } catch (const gradus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
