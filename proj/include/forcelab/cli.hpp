#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab::cli {

enum class Command { kSolve, kCheck, kVerifyPaper, kContainment, kChain, kFamilies };
enum class Output { kTable, kJson };

/// Parsed command line.
struct RunConfig {
  Command command = Command::kSolve;
  std::string family;      // empty when --graph is used
  std::string graph_path;  // empty when --family is used
  std::optional<std::size_t> d, n, m, k;
  std::size_t leaks = 0;
  std::optional<std::vector<Vertex>> set;
  Output output = Output::kTable;
  std::uint64_t budget_evals = 1'000'000'000;
  double budget_secs = 600.0;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::string suite = "all";
  bool include_d7 = false;
  bool describe = false;
  bool trace = false;
  bool assume_vertex_transitive = false;
};

/// Builds the graph named by --family/--graph; the second member is a short
/// descriptor such as "hypercube(d=3)". Throws UsageError.
std::pair<Graph, std::string> load_graph(const RunConfig& config);

/// Parses "3,4,5" into ids. Throws UsageError.
std::vector<Vertex> parse_id_list(const std::string& text);

/// Runs `forcelab <args...>` (args excludes the program name). Exit codes:
/// 0 success, 1 a claim failed or a search ran out of budget, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace forcelab::cli
