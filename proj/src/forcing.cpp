#include "forcelab/forcing.hpp"

#include <algorithm>
#include <atomic>

#include "forcelab/combinations.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {

namespace {

struct NoEvents {
  void operator()(Vertex, Vertex) {}
};

template <typename Record>
VertexSet run_closure(const Graph& g, VertexSet colored,
                      const VertexSet& leaks, Record&& record) {
  const VertexSet all = g.vertices();
  colored &= all;
  VertexSet pending = colored - leaks;
  while (!pending.empty()) {
    const Vertex v = pending.pop_front();
    const VertexSet open = g.neighbors(v) - colored;
    if (open.size() != 1) continue;
    const Vertex u = open.front();
    colored.insert(u);
    record(v, u);
    VertexSet wake = g.neighbors(u);
    wake.insert(u);
    pending |= (wake & colored) - leaks;
  }
  return colored;
}

/// Chunked lexicographic scan over all ℓ-subsets of V. Returns the first
/// failing set in lexicographic order, if any.
std::optional<VertexSet> first_failure_lex(const Graph& g,
                                           const VertexSet& initial,
                                           std::size_t leaks,
                                           const VertexSet* skip_within,
                                           unsigned workers,
                                           LeakStats& stats) {
  const VertexSet all = g.vertices();
  Combinations combos(all, leaks);
  if (workers <= 1) {
    for (bool more = combos.valid(); more; more = combos.next()) {
      const VertexSet& l = combos.current();
      if (skip_within != nullptr && l.is_subset_of(*skip_within)) continue;
      ++stats.leak_sets;
      ++stats.closures;
      if (closure_set(g, initial, l) != all) return l;
    }
    return std::nullopt;
  }
  constexpr std::size_t kChunk = 4096;
  std::vector<VertexSet> batch;
  batch.reserve(kChunk);
  bool more = combos.valid();
  while (more) {
    batch.clear();
    while (more && batch.size() < kChunk) {
      const VertexSet& l = combos.current();
      if (skip_within == nullptr || !l.is_subset_of(*skip_within))
        batch.push_back(l);
      more = combos.next();
    }
    std::atomic<std::size_t> first_bad{batch.size()};
    std::atomic<std::uint64_t> evaluated{0};
    parallel_for(batch.size(), workers, [&](std::size_t i) {
      if (i > first_bad.load(std::memory_order_relaxed)) return;
      evaluated.fetch_add(1, std::memory_order_relaxed);
      if (closure_set(g, initial, batch[i]) != all) atomic_min(first_bad, i);
    });
    stats.leak_sets += evaluated.load();
    stats.closures += evaluated.load();
    if (first_bad.load() < batch.size()) return batch[first_bad.load()];
  }
  return std::nullopt;
}

enum class Probe { kPass, kFail };

/// Cheap probes that settle most failing candidates: no leaks at all, then
/// leaks on the vertices that did the forcing in the leak-free play-out.
/// On kPass, `covered` holds the forcer set when all of its ℓ-subsets were
/// already played out (nullopt otherwise).
Probe fail_fast(const Graph& g, const VertexSet& initial, std::size_t leaks,
                LeakStats& stats, std::optional<VertexSet>& covered) {
  const VertexSet all = g.vertices();
  VertexSet forcers;
  ++stats.closures;
  const VertexSet reach = run_closure(
      g, initial, {}, [&](Vertex v, Vertex) { forcers.insert(v); });
  if (reach != all) return Probe::kFail;
  if (forcers.size() <= leaks) {
    if (forcers.empty()) return Probe::kPass;
    ++stats.closures;
    return closure_set(g, initial, forcers) == all ? Probe::kPass
                                                   : Probe::kFail;
  }
  Combinations combos(forcers, leaks);
  for (bool more = combos.valid(); more; more = combos.next()) {
    ++stats.leak_sets;
    ++stats.closures;
    if (closure_set(g, initial, combos.current()) != all) return Probe::kFail;
  }
  covered = forcers;
  return Probe::kPass;
}

}  // namespace

ForcingTrace closure(const Graph& g, const VertexSet& initial,
                     const VertexSet& leaks) {
  ForcingTrace trace;
  trace.initial = initial;
  trace.leaks = leaks;
  trace.final_set = run_closure(g, initial, leaks, [&](Vertex v, Vertex u) {
    trace.events.push_back({v, u});
  });
  return trace;
}

VertexSet closure_set(const Graph& g, const VertexSet& initial,
                      const VertexSet& leaks) {
  return run_closure(g, initial, leaks, NoEvents{});
}

std::optional<std::string> trace_error(const Graph& g,
                                       const ForcingTrace& trace) {
  const VertexSet all = g.vertices();
  if (!trace.initial.is_subset_of(all) || !trace.leaks.is_subset_of(all))
    return "initial or leak set leaves the vertex range";
  VertexSet colored = trace.initial;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto [v, u] = trace.events[i];
    const std::string at = "event " + std::to_string(i) + " (" +
                           std::to_string(v) + " -> " + std::to_string(u) +
                           "): ";
    if (v >= g.order() || u >= g.order()) return at + "vertex out of range";
    if (trace.leaks.contains(v)) return at + "forcer is leaky";
    if (!colored.contains(v)) return at + "forcer is not colored";
    if (colored.contains(u)) return at + "forced vertex already colored";
    const VertexSet open = g.neighbors(v) - colored;
    if (open.size() != 1 || !open.contains(u))
      return at + "forced vertex is not the unique uncolored neighbor";
    colored.insert(u);
  }
  if (colored != trace.final_set)
    return "final set differs from initial plus forced vertices";
  for (Vertex v : colored - trace.leaks)
    if ((g.neighbors(v) - colored).size() == 1)
      return "vertex " + std::to_string(v) + " can still force";
  return std::nullopt;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& initial) {
  return closure_set(g, initial) == g.vertices();
}

bool passes_leaky(const Graph& g, const VertexSet& initial, std::size_t leaks,
                  LeakStats& stats) {
  const VertexSet all = g.vertices();
  leaks = std::min(leaks, g.order());
  if (all.is_subset_of(initial)) return true;
  if (leaks == 0) {
    ++stats.leak_sets;
    ++stats.closures;
    return closure_set(g, initial) == all;
  }
  std::optional<VertexSet> covered;
  if (fail_fast(g, initial, leaks, stats, covered) == Probe::kFail)
    return false;
  return !first_failure_lex(g, initial, leaks,
                            covered ? &*covered : nullptr, 1, stats)
              .has_value();
}

LeakyCheck is_leaky_forcing_set(const Graph& g, const VertexSet& initial,
                                std::size_t leaks, unsigned workers) {
  LeakyCheck result;
  const VertexSet all = g.vertices();
  leaks = std::min(leaks, g.order());
  if (all.is_subset_of(initial)) return result;

  std::optional<VertexSet> covered;
  std::optional<VertexSet> failing;
  if (leaks == 0) {
    ++result.stats.leak_sets;
    ++result.stats.closures;
    if (closure_set(g, initial) != all) failing = VertexSet{};
  } else if (fail_fast(g, initial, leaks, result.stats, covered) ==
             Probe::kFail) {
    // Some placement fails; find the lexicographically least one.
    failing = first_failure_lex(g, initial, leaks, nullptr, workers,
                                result.stats);
  } else {
    // Full scan, skipping the subsets of `covered` the probe already passed.
    failing = first_failure_lex(g, initial, leaks,
                                covered ? &*covered : nullptr, workers,
                                result.stats);
  }
  if (failing) {
    result.certificate =
        LeakCertificate{*failing, all - closure_set(g, initial, *failing)};
  }
  return result;
}

VertexSet mandatory_vertices(const Graph& g, std::size_t leaks) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).size() <= leaks) out.insert(v);
  return out;
}

}  // namespace forcelab
