#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forcelab/forcing.hpp"

namespace forcelab {

/// Work limits for exhaustive searches. `max_closures` counts game
/// play-outs, i.e. (candidate set, leak set) pairs.
struct SearchBudget {
  std::uint64_t max_closures = 1'000'000'000;
  double max_seconds = 600.0;
};

struct SolveOptions {
  SearchBudget budget;
  unsigned workers = 1;
  /// Seed every candidate with the vertices of degree <= ℓ.
  bool use_mandatory = true;
  /// Only try candidates containing vertex 0. Sound only when the caller
  /// knows the graph is vertex-transitive; the witness is unchanged because
  /// the least minimum set then contains vertex 0.
  bool assume_vertex_transitive = false;
};

/// Raised by enumerations that cannot finish within their budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveReport {
  std::string graph;
  std::size_t leaks = 0;
  /// Set when the search finished; otherwise only the bounds are known.
  std::optional<std::size_t> z_value;
  /// Lexicographically least minimum ℓ-leaky forcing set.
  std::optional<VertexSet> witness;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::uint64_t candidates_tested = 0;
  LeakStats stats;
  double elapsed_ms = 0.0;

  bool exact() const { return z_value.has_value(); }
};

/// Z_(ℓ)(g) by cardinality-ascending search.
///
/// Sizes start at the number of mandatory vertices (or 1); at each size the
/// supersets of the mandatory set are tried in lexicographic order and the
/// first passing one is the witness. Candidates are evaluated in batches by
/// `workers` threads; the least passing index in a batch wins, so the result
/// and the counters do not depend on the worker count. If the budget runs
/// out the report carries [lower_bound, upper_bound] and no value.
SolveReport min_leaky_forcing(const Graph& g, std::size_t leaks,
                              const SolveOptions& options = {},
                              std::string descriptor = {});

/// Every ℓ-leaky forcing set of size z, in lexicographic order. z should be
/// Z_(ℓ)(g). Throws BudgetExceeded when the budget runs out.
std::vector<VertexSet> enumerate_minimum_sets(const Graph& g,
                                              std::size_t leaks, std::size_t z,
                                              const SolveOptions& options = {});

struct ContainmentReport {
  std::size_t leaks = 0;
  std::size_t z0 = 0;
  std::size_t z_leaky = 0;
  bool answer = false;
  /// (minimum zero-forcing set B, minimum ℓ-leaky set B_ℓ) with B ⊆ B_ℓ;
  /// the pair with the least B, then the least B_ℓ.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  std::size_t count0 = 0;
  std::size_t count_leaky = 0;
};

/// Is some minimum ℓ-leaky forcing set a superset of some minimum
/// zero-forcing set? Throws BudgetExceeded.
ContainmentReport containment_question(const Graph& g, std::size_t leaks,
                                       const SolveOptions& options = {});

struct ChainReport {
  std::size_t max_leaks = 0;
  std::vector<std::size_t> z_values;  // Z_(0) .. Z_(k)
  std::vector<std::size_t> counts;    // number of minimum sets per level
  /// B_0 ⊆ B_1 ⊆ ... ⊆ B_k with B_ℓ a minimum ℓ-leaky forcing set.
  bool nonstrict_exists = false;
  std::vector<VertexSet> nonstrict_chain;
  /// Same with every inclusion proper. Impossible whenever two consecutive
  /// levels have the same forcing number.
  bool strict_exists = false;
  std::vector<VertexSet> strict_chain;
  /// Levels ℓ < k with Z_(ℓ) == Z_(ℓ+1).
  std::vector<std::size_t> equal_levels;
  /// Entry ℓ-1 for ℓ = 1..k: does EVERY minimum ℓ-leaky set contain some
  /// minimum (ℓ-1)-leaky set?
  std::vector<bool> every_level_contains_lower;
};

/// Searches for nested minimum sets across leak counts 0..k. Throws
/// BudgetExceeded.
ChainReport nested_chain(const Graph& g, std::size_t max_leaks,
                         const SolveOptions& options = {});

}  // namespace forcelab
