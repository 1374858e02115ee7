#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "graphperiod/criteria.hpp"
#include "graphperiod/graph.hpp"
#include "graphperiod/invariants.hpp"
#include "graphperiod/json_io.hpp"
#include "graphperiod/named_graphs.hpp"
#include "graphperiod/polynomial.hpp"
#include "graphperiod/symmetry.hpp"

namespace graphperiod::cli {

namespace {

class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(std::string text) : std::runtime_error("help"), text_(std::move(text)) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

enum class Criterion { NegamiShape, TutteCoefficients, SelfDual, NegamiQuotient, TutteQuotient, TutteQuotientCleared, Chromatic };

const std::map<std::string, Criterion>& criterion_names() {
  static const std::map<std::string, Criterion> names = {
      {"thm1.1", Criterion::NegamiShape},
      {criterion_id::kNegamiShape, Criterion::NegamiShape},
      {"cor1.2", Criterion::TutteCoefficients},
      {criterion_id::kTutteCoefficients, Criterion::TutteCoefficients},
      {"cor1.3", Criterion::SelfDual},
      {criterion_id::kSelfDualVertexCount, Criterion::SelfDual},
      {"thm3.1", Criterion::NegamiQuotient},
      {criterion_id::kNegamiQuotient, Criterion::NegamiQuotient},
      {"cor3.2", Criterion::TutteQuotient},
      {criterion_id::kTutteQuotient, Criterion::TutteQuotient},
      {criterion_id::kTutteQuotientCleared, Criterion::TutteQuotientCleared},
      {"chromatic-remark", Criterion::Chromatic},
      {criterion_id::kChromaticVanishing, Criterion::Chromatic},
  };
  return names;
}

std::size_t default_subset_cap() {
  if (const char* env = std::getenv(kSubsetCapEnv)) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string(kSubsetCapEnv) + " must be a non-negative integer");
    }
  }
  return kDefaultSubsetCap;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

MultiGraph load_graph(const std::string& source) {
  if (is_named_graph_spec(source)) {
    try {
      return named_graph_from_spec(source);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw UsageError("cannot open graph file '" + source + "'");
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw UsageError(source + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(source + ": " + e.what());
  }
}

std::string render_report(const CriterionReport& r) {
  std::ostringstream out;
  out << "criterion: " << r.criterion << '\n'
      << "graph: " << r.graph << '\n'
      << "p: " << r.p << '\n'
      << "verdict: " << to_string(r.verdict) << '\n';
  out << "violations: " << r.violations.size() << '\n';
  for (const auto& v : r.violations) out << "  " << v.monomial << "  coefficient " << v.coefficient << '\n';
  if (!r.notes.empty()) {
    out << "notes:\n";
    for (const auto& n : r.notes) out << "  " << n << '\n';
  }
  return out.str();
}

template <typename Id>
std::string join(const std::vector<Id>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

std::string render_automorphism(const Automorphism& h) {
  return "vertices: " + join(h.vertex_perm) + "\nedges: " + join(h.edge_perm) + '\n';
}

std::uint32_t require_p(const CommandRequest& req) {
  if (!req.p) throw UsageError("--p is required for '" + req.subcommand + "'");
  return *req.p;
}

CommandResult run_compute(const CommandRequest& req, const MultiGraph& g) {
  Polynomial poly;
  std::vector<std::string> fold_vars;
  if (req.action == "tutte") {
    const auto pair = tutte_deletion_contraction(g);
    poly = req.classic ? pair.classic : pair.shifted;
    fold_vars = poly.vars().names();
  } else if (req.action == "negami") {
    poly = negami_subset_expansion(g, req.subset_cap).poly;
    fold_vars = {"u"};
  } else {
    poly = chromatic_deletion_contraction(g);
    fold_vars = poly.vars().names();
  }
  std::uint32_t modulus = 0;
  if (req.modulus) {
    modulus = *req.modulus;
    auto reduced = reduce_mod_p(poly, modulus);
    if (req.fold) reduced = fold_variables(reduced, fold_vars);
    poly = reduced.poly();
  }
  CommandResult result;
  result.out = req.json ? polynomial_to_json(req.action, req.graph, poly, modulus, req.fold) + '\n'
                        : poly.to_string() + '\n';
  return result;
}

CommandResult emit_report(const CommandRequest& req, const CriterionReport& report) {
  CommandResult result;
  result.out = req.json ? to_json(report) + '\n' : render_report(report);
  result.status = report.verdict == Verdict::Pass ? kExitPass : kExitFail;
  return result;
}

CommandResult run_check(const CommandRequest& req, const MultiGraph& g) {
  const auto p = require_p(req);
  CheckOptions options;
  options.graph_label = req.graph;
  options.subset_cap = req.subset_cap;
  const auto which = criterion_names().at(req.action);
  switch (which) {
    case Criterion::NegamiShape:
      return emit_report(req, check_negami_shape(g, p, options));
    case Criterion::TutteCoefficients:
      return emit_report(req, check_tutte_coefficients(g, p, options));
    case Criterion::SelfDual:
      return emit_report(req, check_selfdual_vertex_count(g, p, req.self_dual, options));
    default:
      break;
  }
  // Quotient criteria need a witness: search for it.
  const auto h = find_free_period(g, p, req.oracle_vertex_limit);
  if (!h) {
    CommandResult result;
    result.status = kExitUsage;
    result.err = "no free period of order " + std::to_string(p) +
                 " exists, so the graph is not p-periodic and the quotient criterion has no witness\n";
    return result;
  }
  InvariantCache cache;
  options.cache = &cache;
  switch (which) {
    case Criterion::NegamiQuotient:
      return emit_report(req, check_negami_quotient_congruence(g, *h, p, options));
    case Criterion::TutteQuotient:
      return emit_report(req, check_tutte_quotient_congruence(g, *h, p, options));
    case Criterion::TutteQuotientCleared:
      return emit_report(req, check_tutte_quotient_cleared(g, *h, p, options));
    default:
      return emit_report(req, check_chromatic_vanishing(g, *h, p, options));
  }
}

CommandResult run_exclude(const CommandRequest& req, const MultiGraph& g) {
  if (req.primes.empty()) throw UsageError("--primes is required for 'exclude'");
  ExclusionOptions options;
  options.check.graph_label = req.graph;
  options.check.subset_cap = req.subset_cap;
  options.use_oracle = req.use_oracle;
  options.oracle_vertex_limit = req.oracle_vertex_limit;
  const auto entries = exclusion_report(g, req.primes, options);
  CommandResult result;
  bool any_excluded = false;
  std::ostringstream out;
  if (req.json) {
    out << exclusion_to_json(req.graph, entries) << '\n';
  } else {
    out << "graph: " << req.graph << '\n';
  }
  for (const auto& e : entries) {
    any_excluded = any_excluded || e.excluded;
    if (req.json) continue;
    out << "p = " << e.p << ": " << (e.excluded ? "excluded" : "not excluded") << " (";
    for (std::size_t i = 0; i < e.reports.size(); ++i) {
      out << (i ? ", " : "") << e.reports[i].criterion << ' ' << to_string(e.reports[i].verdict);
    }
    out << ')';
    if (e.oracle != OracleStatus::NotRun) out << " [oracle: " << to_string(e.oracle) << ']';
    out << '\n';
  }
  result.out = out.str();
  result.status = any_excluded ? kExitFail : kExitPass;
  return result;
}

CommandResult run_oracle(const CommandRequest& req, const MultiGraph& g) {
  CommandResult result;
  if (req.action == "automorphisms") {
    const auto all = enumerate_automorphisms(g, req.oracle_vertex_limit);
    if (req.json) {
      result.out = to_json(all) + '\n';
    } else {
      result.out = "automorphisms: " + std::to_string(all.size()) + '\n';
      for (const auto& h : all) result.out += render_automorphism(h);
    }
    return result;
  }
  const auto p = require_p(req);
  const auto h = find_free_period(g, p, req.oracle_vertex_limit);
  if (!h) {
    result.status = kExitFail;
    result.out = req.json ? "null\n" : "no free period of order " + std::to_string(p) + '\n';
    return result;
  }
  result.out = req.json ? to_json(*h) + '\n' : "free period of order " + std::to_string(p) + '\n' + render_automorphism(*h);
  return result;
}

CommandResult run_quotient(const CommandRequest& req, const MultiGraph& g) {
  const auto p = require_p(req);
  CommandResult result;
  const auto h = find_free_period(g, p, req.oracle_vertex_limit);
  if (!h) {
    result.status = kExitFail;
    result.err = "no free period of order " + std::to_string(p) + '\n';
    return result;
  }
  const auto map = quotient_graph(g, *h);
  if (req.json) {
    result.out = to_json(map) + '\n';
    return result;
  }
  std::ostringstream out;
  out << "# period " << map.period << '\n';
  out << "# vertex orbits:";
  for (const auto& o : map.orbits.vertices) out << " {" << join(o) << '}';
  out << "\n# edge orbits:";
  for (const auto& o : map.orbits.edges) out << " {" << join(o) << '}';
  out << '\n';
  write_edge_list(out, map.quotient);
  result.out = out.str();
  return result;
}

void add_graph_options(CLI::App* sub, CommandRequest& req) {
  sub->add_option("--graph,-g", req.graph, "Named graph (petersen, frucht, cycle:5, ...) or edge-list file")
      ->required();
  sub->add_flag("--json", req.json, "Emit JSON");
  sub->add_option("--cap", req.subset_cap, "Edge cap for the 2^q subset expansion");
  sub->add_option("--oracle-limit", req.oracle_vertex_limit, "Vertex limit for the automorphism oracle");
}

}  // namespace

CommandRequest parse_request(const std::vector<std::string>& args) {
  CommandRequest req;
  req.subset_cap = default_subset_cap();
  req.oracle_vertex_limit = kDefaultOracleVertexLimit;

  CLI::App app{"Graph polynomial invariants and periodicity criteria", "graphperiod"};
  app.require_subcommand(1);

  std::uint32_t modulus = 0;
  std::uint32_t p = 0;

  auto* compute = app.add_subcommand("compute", "Compute a graph polynomial");
  compute->add_option("kind", req.action, "tutte | negami | chromatic")
      ->required()
      ->check(CLI::IsMember({"tutte", "negami", "chromatic"}));
  auto* mod_opt = compute->add_option("--mod", modulus, "Reduce coefficients modulo a prime");
  compute->add_flag("--fold", req.fold, "Fold exponents modulo v^p - v (needs --mod)")->needs(mod_opt);
  compute->add_flag("--classic", req.classic, "Tutte: print tau(x,y) instead of T(s,t)");
  add_graph_options(compute, req);

  std::vector<std::string> criteria;
  for (const auto& [name, _] : criterion_names()) criteria.push_back(name);
  auto* check = app.add_subcommand("check", "Run one periodicity criterion");
  check->add_option("criterion", req.action, "thm1.1 | cor1.2 | cor1.3 | thm3.1 | cor3.2 | chromatic-remark")
      ->required()
      ->check(CLI::IsMember(criteria));
  check->add_option("--p", p, "Prime period")->required();
  check->add_flag("--self-dual", req.self_dual, "Assert the graph is planar and self-dual (cor1.3)");
  add_graph_options(check, req);

  auto* exclude = app.add_subcommand("exclude", "Rule out periods for a list of primes");
  exclude->add_option("--primes", req.primes, "Comma-separated primes")->required()->delimiter(',');
  exclude->add_flag("--oracle", req.use_oracle, "Cross-check with the automorphism oracle");
  add_graph_options(exclude, req);

  auto* oracle = app.add_subcommand("oracle", "Automorphism oracle");
  oracle->require_subcommand(1);
  auto* find_period = oracle->add_subcommand("find-period", "Search for a free period of prime order");
  find_period->add_option("--p", p, "Prime period")->required();
  add_graph_options(find_period, req);
  auto* automorphisms = oracle->add_subcommand("automorphisms", "List all automorphisms");
  add_graph_options(automorphisms, req);

  auto* quotient = app.add_subcommand("quotient", "Quotient graph under a free period");
  quotient->add_option("--p", p, "Prime period")->required();
  add_graph_options(quotient, req);

  std::vector<const char*> argv{"graphperiod"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::string text;
    for (auto* sub : app.get_subcommands()) text = sub->help();
    throw HelpRequested(text.empty() ? app.help() : text);
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (compute->parsed()) {
    req.subcommand = "compute";
    if (mod_opt->count() > 0) {
      require_prime(modulus);
      req.modulus = modulus;
    }
  } else if (check->parsed()) {
    req.subcommand = "check";
    require_prime(p);
    req.p = p;
  } else if (exclude->parsed()) {
    req.subcommand = "exclude";
    for (auto q : req.primes) require_prime(q);
  } else if (oracle->parsed()) {
    req.subcommand = "oracle";
    if (find_period->parsed()) {
      req.action = "find-period";
      require_prime(p);
      req.p = p;
    } else {
      req.action = "automorphisms";
    }
  } else if (quotient->parsed()) {
    req.subcommand = "quotient";
    require_prime(p);
    req.p = p;
  }
  return req;
}

CommandResult run(const CommandRequest& req) {
  const auto g = load_graph(req.graph);
  if (req.subcommand == "compute") return run_compute(req, g);
  if (req.subcommand == "check") return run_check(req, g);
  if (req.subcommand == "exclude") return run_exclude(req, g);
  if (req.subcommand == "oracle") return run_oracle(req, g);
  if (req.subcommand == "quotient") return run_quotient(req, g);
  throw UsageError("unknown subcommand '" + req.subcommand + "'");
}

CommandResult run_command_line(const std::vector<std::string>& args) {
  CommandResult result;
  try {
    return run(parse_request(args));
  } catch (const HelpRequested& h) {
    result.out = h.text();
    return result;
  } catch (const UsageError& e) {
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const LimitExceeded& e) {
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const std::invalid_argument& e) {
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const std::exception& e) {
    result.err = std::string("internal error: ") + e.what() + '\n';
  }
  result.status = kExitUsage;
  return result;
}

}  // namespace graphperiod::cli
