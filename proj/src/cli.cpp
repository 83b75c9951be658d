#include "forcelab/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/families.hpp"
#include "forcelab/report.hpp"
#include "forcelab/solver.hpp"
#include "forcelab/verify.hpp"

namespace forcelab::cli {

namespace {

std::size_t require(const std::optional<std::size_t>& value,
                    const std::string& family, const std::string& flag) {
  if (!value)
    throw UsageError("family '" + family + "' needs " + flag);
  return *value;
}

void add_graph_options(CLI::App* sub, RunConfig& config) {
  auto* family = sub->add_option("--family", config.family,
                                 "hypercube | gp | bipartite | wheel | path | "
                                 "cycle | tree");
  auto* graph = sub->add_option("--graph", config.graph_path,
                                "edge-list file");
  family->excludes(graph);
  sub->add_option("--d", config.d, "hypercube dimension");
  sub->add_option("--n", config.n, "cycle length / side size / order");
  sub->add_option("--m", config.m, "bipartite side size");
  sub->add_option("--k", config.k, "generalized Petersen skip");
  sub->add_option("--seed", config.seed, "random tree seed");
}

void add_run_options(CLI::App* sub, RunConfig& config) {
  sub->add_option("--output", config.output, "json | table")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Output>{{"json", Output::kJson},
                                        {"table", Output::kTable}}));
  sub->add_option("--budget-evals", config.budget_evals,
                  "maximum game play-outs per search");
  sub->add_option("--budget-secs", config.budget_secs,
                  "maximum seconds per search");
  sub->add_option("--workers", config.workers, "worker threads")
      ->check(CLI::Range(1u, 256u));
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions options;
  options.budget.max_closures = config.budget_evals;
  options.budget.max_seconds = config.budget_secs;
  options.workers = config.workers;
  options.assume_vertex_transitive = config.assume_vertex_transitive;
  return options;
}

void emit(std::ostream& out, const RunConfig& config, const std::string& json,
          const std::string& table) {
  out << (config.output == Output::kJson ? json : table);
}

int cmd_solve(const RunConfig& config, std::ostream& out) {
  auto [g, descriptor] = load_graph(config);
  const SolveReport report = min_leaky_forcing(
      g, config.leaks, solve_options(config), std::move(descriptor));
  emit(out, config, to_json(report), to_table(report));
  return report.exact() ? 0 : 1;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  auto [g, descriptor] = load_graph(config);
  if (!config.set) throw UsageError("check needs --set");
  VertexSet set;
  for (Vertex v : *config.set) {
    if (v >= g.order())
      throw UsageError("vertex " + std::to_string(v) + " is not in " +
                       descriptor);
    set.insert(v);
  }
  const LeakyCheck check =
      is_leaky_forcing_set(g, set, config.leaks, config.workers);
  const VertexSet leaks =
      check.ok() ? VertexSet{} : check.certificate->leaks;

  if (config.output == Output::kJson) {
    if (config.trace) {
      const ForcingTrace trace = closure(g, set, leaks);
      out << to_json(check, &trace);
    } else {
      out << to_json(check, nullptr);
    }
    return 0;
  }
  if (check.ok()) {
    out << "ok\n";
  } else {
    out << to_json(*check.certificate);
  }
  if (config.trace) out << to_json(closure(g, set, leaks));
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  VerifyOptions options;
  options.workers = config.workers;
  options.include_d7 = config.include_d7;
  options.budget.max_closures = config.budget_evals;
  options.budget.max_seconds = config.budget_secs;
  const auto results = run_suite(config.suite, options);
  emit(out, config, to_json(results), to_table(results));
  return any_failed(results) ? 1 : 0;
}

int cmd_containment(const RunConfig& config, std::ostream& out) {
  auto [g, descriptor] = load_graph(config);
  const ContainmentReport report =
      containment_question(g, config.leaks, solve_options(config));
  emit(out, config, to_json(report), to_table(report));
  return 0;
}

int cmd_chain(const RunConfig& config, std::ostream& out) {
  auto [g, descriptor] = load_graph(config);
  const ChainReport report =
      nested_chain(g, config.leaks, solve_options(config));
  emit(out, config, to_json(report), to_table(report));
  return 0;
}

int cmd_families(const RunConfig& config, std::ostream& out) {
  if (!config.family.empty() || !config.graph_path.empty()) {
    out << to_edge_list(load_graph(config).first);
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : describe_families()) {
    if (config.describe)
      rows.push_back({f.name, f.parameters, f.layout});
    else
      rows.push_back({f.name, f.parameters});
  }
  if (config.describe)
    out << render_table({"family", "parameters", "id layout"}, rows);
  else
    out << render_table({"family", "parameters"}, rows);
  return 0;
}

}  // namespace

std::vector<Vertex> parse_id_list(const std::string& text) {
  std::vector<Vertex> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) continue;
    tok = tok.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.front() == '-')
      throw UsageError("'" + tok + "' is not a vertex id");
    ids.push_back(static_cast<Vertex>(value));
  }
  return ids;
}

std::pair<Graph, std::string> load_graph(const RunConfig& config) {
  if (!config.graph_path.empty())
    return {read_edge_list(config.graph_path),
            "file(" + config.graph_path + ")"};
  const std::string& f = config.family;
  if (f.empty()) throw UsageError("pass --family or --graph");
  auto num = [](std::size_t v) { return std::to_string(v); };
  if (f == "hypercube") {
    const auto d = require(config.d, f, "--d");
    return {hypercube(d), "hypercube(d=" + num(d) + ")"};
  }
  if (f == "gp") {
    const auto n = require(config.n, f, "--n");
    const auto k = require(config.k, f, "--k");
    return {generalized_petersen(n, k),
            "gp(n=" + num(n) + ",k=" + num(k) + ")"};
  }
  if (f == "bipartite") {
    const auto m = require(config.m, f, "--m");
    const auto n = require(config.n, f, "--n");
    return {complete_bipartite(m, n),
            "bipartite(m=" + num(m) + ",n=" + num(n) + ")"};
  }
  if (f == "wheel") {
    const auto n = require(config.n, f, "--n");
    return {wheel(n), "wheel(n=" + num(n) + ")"};
  }
  if (f == "path") {
    const auto n = require(config.n, f, "--n");
    return {path(n), "path(n=" + num(n) + ")"};
  }
  if (f == "cycle") {
    const auto n = require(config.n, f, "--n");
    return {cycle(n), "cycle(n=" + num(n) + ")"};
  }
  if (f == "tree") {
    const auto n = require(config.n, f, "--n");
    return {random_tree(n, config.seed),
            "tree(n=" + num(n) + ",seed=" + std::to_string(config.seed) +
                ")"};
  }
  throw UsageError("unknown family '" + f + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact leaky zero forcing: solve, check and verify",
               "forcelab"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "compute Z_(L) and a witness");
  auto* check = app.add_subcommand(
      "check", "test a set against every placement of L leaks");
  auto* verify =
      app.add_subcommand("verify-paper", "reproduce the closed-form results");
  auto* contain = app.add_subcommand(
      "containment",
      "does a minimum L-leaky set contain a minimum zero forcing set?");
  auto* chain = app.add_subcommand(
      "chain", "look for nested minimum sets for leak counts 0..L");
  auto* fams = app.add_subcommand(
      "families", "list families, or print one as an edge list");

  for (auto* sub : {solve, check, contain, chain, fams})
    add_graph_options(sub, config);
  for (auto* sub : {solve, check, verify, contain, chain})
    add_run_options(sub, config);
  for (auto* sub : {solve, check, contain, chain})
    sub->add_option("--leaks", config.leaks, "number of leaks L");
  solve->add_flag("--assume-vertex-transitive",
                  config.assume_vertex_transitive,
                  "only try sets containing vertex 0");
  std::string set_text;
  check->add_option("--set", set_text, "comma-separated vertex ids")
      ->required();
  check->add_flag("--trace", config.trace,
                  "also print the play-out under the reported leaks");
  verify->add_option("--suite", config.suite)
      ->check(CLI::IsMember(suite_names()));
  verify->add_flag("--include-d7", config.include_d7,
                   "also check the Q_7 half-cube");
  fams->add_flag("--describe", config.describe, "print vertex-id layouts");

  std::vector<std::string> argv_store;
  argv_store.push_back("forcelab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "forcelab: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) config.set = parse_id_list(set_text);
    const std::vector<std::pair<CLI::App*, Command>> commands = {
        {solve, Command::kSolve},       {check, Command::kCheck},
        {verify, Command::kVerifyPaper}, {contain, Command::kContainment},
        {chain, Command::kChain},       {fams, Command::kFamilies}};
    for (auto [sub, command] : commands)
      if (sub->parsed()) config.command = command;
    switch (config.command) {
      case Command::kSolve: return cmd_solve(config, out);
      case Command::kCheck: return cmd_check(config, out);
      case Command::kVerifyPaper: return cmd_verify(config, out);
      case Command::kContainment: return cmd_containment(config, out);
      case Command::kChain: return cmd_chain(config, out);
      case Command::kFamilies: return cmd_families(config, out);
    }
  } catch (const UsageError& e) {
    err << "forcelab: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "forcelab: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "forcelab: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace forcelab::cli
