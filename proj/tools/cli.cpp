#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "extremal/blowup.hpp"
#include "extremal/bounds.hpp"
#include "extremal/embeddings.hpp"
#include "extremal/graph_io.hpp"
#include "extremal/matchings.hpp"
#include "extremal/oracle.hpp"
#include "extremal/rational.hpp"

namespace extremal::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  unsigned workers = 1;
  std::string out;
  std::size_t budget_n = 8;
  unsigned grid = 50;
  double time_limit = 0;  // seconds; 0 means none
};

struct Outcome {
  Json report;
  bool all_hold = true;
  std::string raw;  // written verbatim instead of the report when set
};

std::string str(const Rational& q) { return to_fraction_string(q); }
std::string str(const Integer& z) { return z.get_str(); }

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const GraphParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json graph_summary(const Graph& g, const std::string& source) {
  return Json{{"source", source}, {"order", g.order()}, {"edges", g.edge_count()}};
}

Json edge_list(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

Json step_json(const ChainStep& step) {
  return Json{{"lhs_name", step.lhs_name}, {"relation", relation_symbol(step.relation)},
              {"rhs_name", step.rhs_name}, {"lhs", str(step.lhs)},
              {"rhs", str(step.rhs)},     {"holds", step.holds}};
}

Json steps_json(const std::vector<ChainStep>& steps, bool& all_hold) {
  Json out = Json::array();
  for (const auto& s : steps) {
    out.push_back(step_json(s));
    all_hold = all_hold && s.holds;
  }
  return out;
}

OracleConfig oracle_config(const Globals& g) {
  if (g.budget_n > kHardMaxEnumeration) {
    throw BudgetExceeded("--budget-n may not exceed " + std::to_string(kHardMaxEnumeration));
  }
  OracleConfig config;
  config.budget_n = g.budget_n;
  config.workers = g.workers;
  if (g.time_limit > 0) {
    config.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(g.time_limit));
  }
  return config;
}

// ---------------------------------------------------------------------------
// CSV is a flat projection of the JSON report: one "field,value" row per leaf.

void flatten(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, rows);
  } else if (j.is_array()) {
    if (j.empty()) rows.emplace_back(key, "");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), rows);
  } else if (j.is_string()) {
    rows.emplace_back(key, j.get<std::string>());
  } else if (j.is_null()) {
    rows.emplace_back(key, "");
  } else {
    rows.emplace_back(key, j.dump());
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string text = "field,value\n";
  for (const auto& [k, v] : rows) text += csv_cell(k) + "," + csv_cell(v) + "\n";
  return text;
}

// ---------------------------------------------------------------------------

Outcome cmd_count(const std::string& pattern_path, const std::string& host_path, const Globals& g) {
  const Graph pattern = load(pattern_path);
  const Graph host = load(host_path);
  const CountOptions options{g.workers};
  const auto degrees = h_degrees(pattern, host, options);
  const Integer automorphisms = count_automorphisms(pattern);
  if (!mpz_divisible_p(degrees.total().get_mpz_t(), automorphisms.get_mpz_t())) {
    throw std::logic_error("embedding count is not divisible by the automorphism count");
  }
  Json h = Json::array();
  for (const auto& value : degrees.per_vertex()) h.push_back(str(value));
  Outcome out;
  out.report = Json{{"command", "count"},
                    {"pattern", graph_summary(pattern, pattern_path)},
                    {"host", graph_summary(host, host_path)},
                    {"embeddings", str(degrees.total())},
                    {"automorphisms", str(automorphisms)},
                    {"copies", str(Integer(degrees.total() / automorphisms))},
                    {"h_degrees", h}};
  return out;
}

Outcome verify_lemma2(const std::string& graph_path, std::optional<std::size_t> n, const Globals& g) {
  Outcome out;
  out.report = Json{{"command", "verify"}, {"theorem", "lemma2"}};
  auto one = [](const Graph& graph) {
    const auto r = edge_bound_check(graph);
    return Json{{"edges", r.edges},
                {"max_degree", r.max_degree},
                {"bound", r.bound},
                {"holds", r.holds},
                {"equality", r.equality},
                {"equality_is_complete_bipartite", r.equality_is_complete_bipartite}};
  };
  if (!graph_path.empty()) {
    const Graph graph = load(graph_path);
    if (!is_triangle_free(graph)) throw UsageError(graph_path + ": graph is not triangle-free");
    Json r = one(graph);
    out.all_hold = r["holds"].get<bool>() && r["equality_is_complete_bipartite"].get<bool>();
    out.report["graph"] = graph_summary(graph, graph_path);
    out.report["check"] = r;
  } else {
    if (!n) throw UsageError("lemma2 needs --graph or --n");
    const auto graphs = enumerate_triangle_free(*n, oracle_config(g));
    std::size_t equality_cases = 0;
    std::size_t complete_bipartite = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto r = edge_bound_check(graphs[i]);
      const bool cb = complete_bipartite_parts(graphs[i]).has_value();
      complete_bipartite += cb ? 1 : 0;
      equality_cases += r.equality ? 1 : 0;
      // Equality exactly on complete bipartite graphs.
      if (!r.holds || r.equality != cb || !r.equality_is_complete_bipartite) {
        failures.push_back(Json{{"index", i}, {"edges", edge_list(graphs[i])}});
      }
    }
    out.all_hold = failures.empty();
    out.report["n"] = *n;
    out.report["graphs"] = graphs.size();
    out.report["equality_cases"] = equality_cases;
    out.report["complete_bipartite_graphs"] = complete_bipartite;
    out.report["failures"] = failures;
  }
  out.report["all_hold"] = out.all_hold;
  return out;
}

Outcome verify_thm1_coeff(std::optional<std::uint64_t> x, std::uint64_t d, std::uint64_t x_max,
                          const Globals& g) {
  Outcome out;
  out.report = Json{{"command", "verify"}, {"theorem", "thm1-coeff"}};
  if (x) {
    const auto c = thm1_coefficient(*x, d);
    out.all_hold = c.exceeds_two_fifths;
    out.report["x"] = *x;
    out.report["d"] = d;
    out.report["hypothesis_holds"] = thm1_hypothesis_holds(*x, d);
    out.report["inequality"] =
        Json{{"lhs_name", "coefficient"}, {"relation", ">"}, {"rhs_name", "two_fifths"},
             {"lhs", str(c.value)},        {"rhs", "2/5"},    {"holds", c.exceeds_two_fifths}};
  } else {
    const auto sweep = thm1_sweep(x_max, g.workers);
    Json violations = Json::array();
    for (const auto& v : sweep.violations)
      violations.push_back(Json{{"x", v.x}, {"d", v.d}, {"what", v.what}});
    out.all_hold = sweep.violations.empty();
    out.report["x_max"] = x_max;
    out.report["pairs_checked"] = sweep.pairs_checked;
    out.report["steps_checked"] = sweep.steps_checked;
    out.report["min_coefficient"] = str(sweep.min_coefficient);
    out.report["min_at"] = Json{{"x", sweep.min_x}, {"d", sweep.min_d}};
    out.report["two_fifths"] = "2/5";
    out.report["violations"] = violations;
  }
  out.report["all_hold"] = out.all_hold;
  return out;
}

Outcome verify_thm1_chain(std::uint64_t x, std::uint64_t d) {
  const auto chain = thm1_chain_check(x, d);
  Outcome out;
  Json values = Json::object();
  for (const auto& [name, value] : chain.values) values[name] = str(value);
  out.report = Json{{"command", "verify"},
                    {"theorem", "thm1-chain"},
                    {"x", x},
                    {"d", d},
                    {"hypothesis_holds", chain.hypothesis_holds},
                    {"values", values}};
  out.report["steps"] = steps_json(chain.steps, out.all_hold);
  out.all_hold = out.all_hold && chain.all_hold;
  out.report["all_hold"] = out.all_hold;
  return out;
}

Json params_json(const Theorem2Params& p, bool& all_hold) {
  Json j{{"lambda", str(p.lambda)},
         {"a", str(p.a)},
         {"b", str(p.b)},
         {"c", str(p.c)},
         {"p_power_exponent", p.lambda_den},
         {"p_power", str(p.p_pow_den)},
         {"p_approx", p.p},
         {"log_argument", str(p.log_argument)},
         {"x_min", p.x_min}};
  j["inequalities"] = steps_json(theorem2_param_steps(p), all_hold);
  all_hold = all_hold && p.all_hold();
  return j;
}

ParamSearchConfig param_config(std::uint64_t a_resolution, unsigned c_depth) {
  ParamSearchConfig config;
  config.a_resolution = a_resolution;
  config.c_halving_depth = c_depth;
  return config;
}

Outcome verify_thm2_params(const std::string& lambda, const ParamSearchConfig& config) {
  const auto params = solve_theorem2_params(parse_rational(lambda), config);
  Outcome out;
  out.report = Json{{"command", "verify"}, {"theorem", "thm2-params"}};
  out.report["params"] = params_json(params, out.all_hold);
  out.report["all_hold"] = out.all_hold;
  return out;
}

Outcome verify_thm2_e2e(const std::string& lambda, std::uint64_t x, const ParamSearchConfig& config) {
  const auto cert = theorem2_end_to_end(parse_rational(lambda), x, config);
  Outcome out;
  out.report = Json{{"command", "verify"}, {"theorem", "thm2-e2e"}};
  out.report["params"] = params_json(cert.params, out.all_hold);
  out.report["x"] = cert.x;
  out.report["d"] = cert.d;
  out.report["pattern_order"] = cert.pattern_order;
  out.report["l_c5"] = str(cert.l_c5);
  out.report["l_k2"] = str(cert.l_k2);
  out.report["c5_hom_count"] = str(cert.c5_hom_count);
  out.report["canonical_hom_product"] = str(cert.canonical_hom_product);
  out.report["inequalities"] = steps_json(theorem2_certificate_steps(cert), out.all_hold);
  bool ignored = true;
  out.report["exponent_forms"] = steps_json(theorem2_exponent_forms(cert), ignored);
  out.report["all_hold"] = out.all_hold;
  return out;
}

Outcome cmd_optimize(const std::string& pattern_path, const std::string& target,
                     OptimizerConfig config, const Globals& g) {
  const Graph h = load(pattern_path);
  Graph p;
  if (target == "k2") {
    p = complete_graph(2);
  } else if (target == "c5") {
    p = cycle_graph(5);
  } else {
    p = load(target);
  }
  if (p.order() > 8) throw UsageError("blow-up pattern has " + std::to_string(p.order()) +
                                      " vertices; at most 8 are supported");
  config.grid_resolution = g.grid;
  config.workers = g.workers;
  const auto r = optimize_weights(h, p, config);
  Json weights = Json::array();
  for (const auto& w : r.best.weights()) weights.push_back(str(w));
  Outcome out;
  out.report = Json{{"command", "optimize"},
                    {"pattern", graph_summary(h, pattern_path)},
                    {"blowup", graph_summary(p, target)},
                    {"weights", weights},
                    {"coefficient", str(r.coefficient.value)},
                    {"coefficient_approx", r.coefficient.value.get_d()},
                    {"hom_count", str(r.coefficient.hom_count)},
                    {"grid_resolution", r.resolution_used},
                    {"grid_points", r.grid_points},
                    {"automorphisms", r.automorphisms}};
  if (config.trace) out.report["trace"] = r.trace;
  return out;
}

// h(v) <= h(u) + h(u, v) for all u, v.
bool lemma1_holds(const Graph& pattern, const Graph& host, unsigned workers) {
  const auto report = h_degrees(pattern, host, {workers});
  for (Vertex u = 0; u < host.order(); ++u)
    for (Vertex v = 0; v < host.order(); ++v)
      if (report.h(v) > report.h(u) + report.pair(u, v)) return false;
  return true;
}

Outcome cmd_search(const std::string& pattern_path, std::size_t n, const std::string& witness_dir,
                   const Globals& g) {
  const Graph pattern = load(pattern_path);
  const std::string id = fs::path(pattern_path).stem().string();
  const auto r = find_maximizers(pattern, n, oracle_config(g), id);
  Json witnesses = Json::array();
  bool lemma1 = true;
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const Graph& w = r.witnesses[i];
    const bool ok = lemma1_holds(pattern, w, g.workers);
    lemma1 = lemma1 && ok;
    Json entry{{"code", std::to_string(canonical_code(w).bits)}, {"edges", edge_list(w)}};
    if (r.witness_parts[i]) {
      entry["complete_bipartite_parts"] = {r.witness_parts[i]->first, r.witness_parts[i]->second};
    } else {
      entry["complete_bipartite_parts"] = nullptr;
    }
    entry["lemma1_holds"] = ok;
    if (!witness_dir.empty()) {
      fs::create_directories(witness_dir);
      const fs::path file = fs::path(witness_dir) / (id + "_n" + std::to_string(n) + "_" + std::to_string(i) + ".txt");
      write_graph_file(file, w);
      entry["file"] = file.filename().string();
    }
    witnesses.push_back(entry);
  }
  Outcome out;
  out.report = Json{{"command", "search"},
                    {"pattern", graph_summary(pattern, pattern_path)},
                    {"pattern_id", r.pattern_id},
                    {"n", r.n},
                    {"graphs_examined", r.graphs_examined},
                    {"max_count", str(r.max_count)},
                    {"all_bipartite", r.all_bipartite},
                    {"all_complete_bipartite", r.all_complete_bipartite},
                    {"lemma1_holds", lemma1},
                    {"witnesses", witnesses}};
  return out;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(what + " must be a non-negative integer, got '" + s + "'");
  }
}

Outcome cmd_gen(const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("gen needs a family");
  const std::string& family = words[0];
  auto arg = [&](std::size_t i) {
    if (i >= words.size()) throw UsageError("gen " + family + ": missing argument " + std::to_string(i));
    return to_size(words[i], family + " argument");
  };
  auto expect_args = [&](std::size_t k) {
    if (words.size() != k + 1)
      throw UsageError("gen " + family + " takes " + std::to_string(k) + " argument(s)");
  };
  Graph g;
  if (family == "turan2") {
    expect_args(1);
    g = build_turan2(arg(1));
  } else if (family == "gps") {
    expect_args(1);
    g = build_gps_example1(arg(1));
  } else if (family == "theorem2") {
    expect_args(2);
    g = build_theorem2_H(arg(1), arg(2));
  } else if (family == "cycle") {
    expect_args(1);
    g = cycle_graph(arg(1));
  } else if (family == "path") {
    expect_args(1);
    g = path_graph(arg(1));
  } else if (family == "star") {
    expect_args(1);
    g = star_graph(arg(1));
  } else if (family == "complete") {
    expect_args(1);
    g = complete_graph(arg(1));
  } else if (family == "complete-bipartite") {
    expect_args(2);
    g = complete_bipartite(arg(1), arg(2));
  } else if (family == "petersen") {
    expect_args(0);
    g = petersen_graph();
  } else if (family == "blowup") {
    if (words.size() < 2) throw UsageError("gen blowup needs a pattern file and blob sizes");
    const Graph pattern = load(words[1]);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 2; i < words.size(); ++i) sizes.push_back(arg(i));
    g = build_blowup(pattern, sizes);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  Outcome out;
  out.raw = to_text(g);
  return out;
}

void emit(const Outcome& outcome, const Globals& g, std::ostream& out) {
  const std::string text = outcome.raw.empty() ? render(outcome.report, g.format) : outcome.raw;
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + g.out);
  file << text;
}

unsigned default_workers() {
  if (const char* env = std::getenv("EXTREMAL_COUNT_WORKERS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact embedding counts, blow-up coefficients and extremal checks for triangle-free graphs",
               "extremal"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.workers = default_workers();
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", g.workers, "Worker threads (default: $EXTREMAL_COUNT_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the report (or generated graph) to this file");
  app.add_option("--budget-n", g.budget_n, "Largest n the enumeration oracle accepts (max 9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", g.grid, "Optimizer grid resolution")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", g.time_limit, "Seconds before the oracle gives up")
      ->check(CLI::NonNegativeNumber);

  Outcome outcome;
  std::function<Outcome()> action;

  auto* count = app.add_subcommand("count", "Embeddings, automorphisms, copies and H-degrees");
  std::string count_pattern, count_host;
  count->add_option("pattern", count_pattern)->required();
  count->add_option("host", count_host)->required();
  count->callback([&] { action = [&] { return cmd_count(count_pattern, count_host, g); }; });

  auto* verify = app.add_subcommand("verify", "Check an inequality exactly and print a certificate");
  verify->require_subcommand(1);

  auto* lemma2 = verify->add_subcommand("lemma2", "|E| <= Delta (n - Delta) on triangle-free graphs");
  std::string lemma2_graph;
  std::optional<std::size_t> lemma2_n;
  lemma2->add_option("--graph", lemma2_graph, "Graph file");
  lemma2->add_option("--n", lemma2_n, "Check every triangle-free graph on n vertices");
  lemma2->callback([&] { action = [&] { return verify_lemma2(lemma2_graph, lemma2_n, g); }; });

  auto* coeff = verify->add_subcommand("thm1-coeff", "Minimum-degree coefficient against 2/5");
  std::optional<std::uint64_t> coeff_x;
  std::uint64_t coeff_d = 0;
  std::uint64_t coeff_x_max = 300;
  coeff->add_option("--x", coeff_x, "Matching size (omit to sweep)");
  coeff->add_option("--d", coeff_d, "Half the number of unmatched vertices");
  coeff->add_option("--x-max", coeff_x_max, "Sweep bound")->capture_default_str();
  coeff->callback([&] { action = [&] { return verify_thm1_coeff(coeff_x, coeff_d, coeff_x_max, g); }; });

  auto* chain = verify->add_subcommand("thm1-chain", "Every step of the lower-bound chain");
  std::uint64_t chain_x = 0, chain_d = 0;
  chain->add_option("--x", chain_x)->required();
  chain->add_option("--d", chain_d)->required();
  chain->callback([&] { action = [&] { return verify_thm1_chain(chain_x, chain_d); }; });

  std::string lambda = "1";
  std::uint64_t a_resolution = 1024;
  unsigned c_depth = 60;
  auto add_param_options = [&](CLI::App* sub) {
    sub->add_option("--lambda", lambda, "Unmatched-to-matched ratio, e.g. 1 or 2/3")->capture_default_str();
    sub->add_option("--a-resolution", a_resolution)->capture_default_str();
    sub->add_option("--c-depth", c_depth)->capture_default_str();
  };
  auto* params = verify->add_subcommand("thm2-params", "Blob weights and threshold for the C5 blow-up");
  add_param_options(params);
  params->callback([&] {
    action = [&] { return verify_thm2_params(lambda, param_config(a_resolution, c_depth)); };
  });

  auto* e2e = verify->add_subcommand("thm2-e2e", "Leading coefficients of H(d, x) in C5 and K2 blow-ups");
  add_param_options(e2e);
  std::uint64_t e2e_x = 0;
  e2e->add_option("--x", e2e_x, "Matching size (default: first admissible above the threshold)");
  e2e->callback([&] {
    action = [&] { return verify_thm2_e2e(lambda, e2e_x, param_config(a_resolution, c_depth)); };
  });

  auto* optimize = app.add_subcommand("optimize", "Maximise the leading coefficient over blob weights");
  std::string opt_pattern, opt_target;
  OptimizerConfig opt_config;
  optimize->add_option("pattern", opt_pattern)->required();
  optimize->add_option("blowup", opt_target, "k2, c5 or a graph file")->required();
  optimize->add_option("--max-iterations", opt_config.max_iterations)->capture_default_str();
  optimize->add_option("--tolerance", opt_config.tolerance)->capture_default_str();
  optimize->add_option("--seeds", opt_config.seeds)->capture_default_str();
  optimize->add_option("--max-denominator", opt_config.max_denominator)->capture_default_str();
  optimize->add_flag("--trace", opt_config.trace, "Include the optimizer trace");
  optimize->callback([&] {
    action = [&] { return cmd_optimize(opt_pattern, opt_target, opt_config, g); };
  });

  auto* search = app.add_subcommand("search", "Exact maximisers over all triangle-free graphs on n vertices");
  std::string search_pattern, witness_dir;
  std::size_t search_n = 0;
  search->add_option("pattern", search_pattern)->required();
  search->add_option("n", search_n)->required();
  search->add_option("--witness-dir", witness_dir, "Write each witness graph here");
  search->callback([&] {
    action = [&] { return cmd_search(search_pattern, search_n, witness_dir, g); };
  });

  auto* gen = app.add_subcommand("gen", "Write a graph: turan2 N | gps K | theorem2 D X | cycle N | path N | "
                                        "star L | complete N | complete-bipartite A B | petersen | "
                                        "blowup FILE S1 S2 ...");
  std::vector<std::string> gen_spec;
  gen->add_option("family", gen_spec)->required();
  gen->callback([&] { action = [&] { return cmd_gen(gen_spec); }; });

  std::vector<const char*> argv{"extremal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (g.budget_n == kHardMaxEnumeration) {
    err << "warning: --budget-n 9 enumerates 1897 classes at n = 9 and is slow\n";
  }
  try {
    outcome = action();
    emit(outcome, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitUsage;
  }
  return outcome.all_hold ? kExitOk : kExitFalse;
}

}  // namespace extremal::cli
