#include "forcelab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>

#include "forcelab/combinations.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kBatch = 256;

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& budget)
      : budget_(budget), start_(Clock::now()) {}

  bool exhausted(std::uint64_t closures) const {
    return closures > budget_.max_closures || seconds() > budget_.max_seconds;
  }
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
};

struct BatchOutcome {
  /// Index of the least passing candidate, or batch size.
  std::size_t first_pass;
  std::vector<LeakStats> stats;
  std::vector<char> passed;
};

/// Evaluates every candidate in `batch`; once some index passes, larger
/// indices may be skipped, smaller ones never are.
BatchOutcome evaluate_batch(const Graph& g, std::size_t leaks,
                            const std::vector<VertexSet>& batch,
                            unsigned workers, bool stop_at_first) {
  BatchOutcome out{batch.size(), std::vector<LeakStats>(batch.size()),
                   std::vector<char>(batch.size(), 0)};
  std::atomic<std::size_t> first{batch.size()};
  parallel_for(batch.size(), workers, [&](std::size_t i) {
    if (stop_at_first && i > first.load(std::memory_order_relaxed)) return;
    if (passes_leaky(g, batch[i], leaks, out.stats[i])) {
      out.passed[i] = 1;
      atomic_min(first, i);
    }
  });
  out.first_pass = first.load();
  return out;
}

/// Walks the size-`size` supersets of `base` (drawn from `pool`) in
/// lexicographic order, one batch at a time. `visit` returns false to stop.
void for_each_batch(const VertexSet& base, const VertexSet& pool,
                    std::size_t size,
                    const std::function<bool(std::vector<VertexSet>&)>& visit) {
  if (size < base.size()) return;
  Combinations combos(pool, size - base.size());
  std::vector<VertexSet> batch;
  batch.reserve(kBatch);
  bool more = combos.valid();
  while (more) {
    batch.clear();
    while (more && batch.size() < kBatch) {
      batch.push_back(base | combos.current());
      more = combos.next();
    }
    if (!visit(batch)) return;
  }
}

}  // namespace

SolveReport min_leaky_forcing(const Graph& g, std::size_t leaks,
                              const SolveOptions& options,
                              std::string descriptor) {
  const BudgetClock clock(options.budget);
  SolveReport report;
  report.graph = std::move(descriptor);
  report.leaks = leaks;
  const std::size_t n = g.order();
  report.upper_bound = n;

  VertexSet base =
      options.use_mandatory ? mandatory_vertices(g, leaks) : VertexSet{};
  if (options.assume_vertex_transitive && n > 0) base.insert(0);
  const VertexSet pool = g.vertices() - base;

  std::size_t start = base.size();
  if (start == 0 && n > 0) start = 1;
  report.lower_bound = options.use_mandatory ? base.size() : 0;

  for (std::size_t size = start; size <= n; ++size) {
    report.lower_bound = std::max(report.lower_bound, size);
    bool found = false;
    bool out_of_budget = false;
    for_each_batch(base, pool, size, [&](std::vector<VertexSet>& batch) {
      BatchOutcome outcome =
          evaluate_batch(g, leaks, batch, options.workers, true);
      const std::size_t counted =
          std::min(outcome.first_pass + 1, batch.size());
      for (std::size_t i = 0; i < counted; ++i)
        report.stats += outcome.stats[i];
      report.candidates_tested += counted;
      if (outcome.first_pass < batch.size()) {
        found = true;
        report.witness = batch[outcome.first_pass];
        return false;
      }
      if (clock.exhausted(report.stats.closures)) {
        out_of_budget = true;
        return false;
      }
      return true;
    });
    if (found) {
      report.z_value = size;
      report.lower_bound = report.upper_bound = size;
      break;
    }
    if (out_of_budget) break;
  }
  report.elapsed_ms = clock.seconds() * 1000.0;
  return report;
}

std::vector<VertexSet> enumerate_minimum_sets(const Graph& g,
                                              std::size_t leaks, std::size_t z,
                                              const SolveOptions& options) {
  const BudgetClock clock(options.budget);
  const VertexSet base =
      options.use_mandatory ? mandatory_vertices(g, leaks) : VertexSet{};
  const VertexSet pool = g.vertices() - base;
  std::vector<VertexSet> out;
  std::uint64_t closures = 0;
  for_each_batch(base, pool, z, [&](std::vector<VertexSet>& batch) {
    BatchOutcome outcome =
        evaluate_batch(g, leaks, batch, options.workers, false);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      closures += outcome.stats[i].closures;
      if (outcome.passed[i]) out.push_back(batch[i]);
    }
    if (clock.exhausted(closures))
      throw BudgetExceeded("enumerating minimum " + std::to_string(leaks) +
                           "-leaky forcing sets of size " +
                           std::to_string(z) + " exceeded the budget");
    return true;
  });
  return out;
}

namespace {

std::size_t exact_value(const Graph& g, std::size_t leaks,
                        const SolveOptions& options) {
  SolveOptions plain = options;
  plain.assume_vertex_transitive = false;
  const SolveReport r = min_leaky_forcing(g, leaks, plain);
  if (!r.exact())
    throw BudgetExceeded("Z_(" + std::to_string(leaks) +
                         ") search exceeded the budget; bounds [" +
                         std::to_string(r.lower_bound) + ", " +
                         std::to_string(r.upper_bound) + "]");
  return *r.z_value;
}

}  // namespace

ContainmentReport containment_question(const Graph& g, std::size_t leaks,
                                       const SolveOptions& options) {
  ContainmentReport report;
  report.leaks = leaks;
  report.z0 = exact_value(g, 0, options);
  report.z_leaky = exact_value(g, leaks, options);
  const auto zero_sets = enumerate_minimum_sets(g, 0, report.z0, options);
  const auto leaky_sets =
      enumerate_minimum_sets(g, leaks, report.z_leaky, options);
  report.count0 = zero_sets.size();
  report.count_leaky = leaky_sets.size();
  for (const VertexSet& b : zero_sets) {
    for (const VertexSet& bl : leaky_sets) {
      if (b.is_subset_of(bl)) {
        report.answer = true;
        report.witness = std::make_pair(b, bl);
        return report;
      }
    }
  }
  return report;
}

namespace {

/// Depth-first search for B_0 ⊆ ... ⊆ B_k, one set per level, remembering
/// sets that cannot be extended.
class ChainSearch {
 public:
  ChainSearch(const std::vector<std::vector<VertexSet>>& levels, bool strict)
      : levels_(levels), strict_(strict), dead_(levels.size()) {
    for (std::size_t l = 0; l < levels.size(); ++l)
      dead_[l].assign(levels[l].size(), 0);
  }

  std::optional<std::vector<VertexSet>> run() {
    if (levels_.empty()) return std::vector<VertexSet>{};
    for (std::size_t i = 0; i < levels_[0].size(); ++i) {
      chain_.assign(1, levels_[0][i]);
      if (extend(0, i)) return chain_;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t level, std::size_t index) {
    if (level + 1 == levels_.size()) return true;
    if (dead_[level][index]) return false;
    const VertexSet& lower = levels_[level][index];
    const auto& next = levels_[level + 1];
    for (std::size_t j = 0; j < next.size(); ++j) {
      if (!lower.is_subset_of(next[j])) continue;
      if (strict_ && lower == next[j]) continue;
      chain_.push_back(next[j]);
      if (extend(level + 1, j)) return true;
      chain_.pop_back();
    }
    dead_[level][index] = 1;
    return false;
  }

  const std::vector<std::vector<VertexSet>>& levels_;
  bool strict_;
  std::vector<std::vector<char>> dead_;
  std::vector<VertexSet> chain_;
};

}  // namespace

ChainReport nested_chain(const Graph& g, std::size_t max_leaks,
                         const SolveOptions& options) {
  ChainReport report;
  report.max_leaks = max_leaks;
  std::vector<std::vector<VertexSet>> levels;
  for (std::size_t l = 0; l <= max_leaks; ++l) {
    const std::size_t z = exact_value(g, l, options);
    report.z_values.push_back(z);
    levels.push_back(enumerate_minimum_sets(g, l, z, options));
    report.counts.push_back(levels.back().size());
  }
  for (std::size_t l = 0; l < max_leaks; ++l)
    if (report.z_values[l] == report.z_values[l + 1])
      report.equal_levels.push_back(l);

  if (auto chain = ChainSearch(levels, false).run()) {
    report.nonstrict_exists = true;
    report.nonstrict_chain = std::move(*chain);
  }
  if (auto chain = ChainSearch(levels, true).run()) {
    report.strict_exists = true;
    report.strict_chain = std::move(*chain);
  }
  for (std::size_t l = 1; l <= max_leaks; ++l) {
    const bool every = std::all_of(
        levels[l].begin(), levels[l].end(), [&](const VertexSet& upper) {
          return std::any_of(
              levels[l - 1].begin(), levels[l - 1].end(),
              [&](const VertexSet& lower) { return lower.is_subset_of(upper); });
        });
    report.every_level_contains_lower.push_back(every);
  }
  return report;
}

}  // namespace forcelab
