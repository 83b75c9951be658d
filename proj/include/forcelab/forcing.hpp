#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

struct ForceEvent {
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

/// One play-out of the game: the initial colored set, the leaky vertices,
/// the forces in the order they were applied, and the colored set at the
/// fixpoint.
struct ForcingTrace {
  VertexSet initial;
  VertexSet leaks;
  std::vector<ForceEvent> events;
  VertexSet final_set;
};

/// A leak placement under which the colored set stalls before covering V.
struct LeakCertificate {
  VertexSet leaks;
  VertexSet stalled;  // uncolored vertices at the fixpoint
  friend bool operator==(const LeakCertificate&,
                         const LeakCertificate&) = default;
};

/// Applies the color change rule until nothing changes. A colored vertex
/// that is not leaky and has exactly one uncolored neighbor colors it.
/// Leaky vertices may be colored (initially or later) but never force.
///
/// Candidate forcers are kept in a worklist and always taken smallest id
/// first; a vertex goes back on the list whenever a neighbor is colored.
/// The fixpoint does not depend on this order, the event list does.
ForcingTrace closure(const Graph& g, const VertexSet& initial,
                     const VertexSet& leaks = {});

/// closure(...).final_set without recording events.
VertexSet closure_set(const Graph& g, const VertexSet& initial,
                      const VertexSet& leaks = {});

/// Replays a trace against g. Returns a description of the first violated
/// trace invariant, or nullopt if the trace is a valid play-out ending at a
/// fixpoint.
std::optional<std::string> trace_error(const Graph& g,
                                       const ForcingTrace& trace);

bool is_zero_forcing_set(const Graph& g, const VertexSet& initial);

/// Counters for leak enumeration. `leak_sets` counts distinct placements of
/// exactly ℓ leaks that were played out; `closures` counts every play-out,
/// including probes.
struct LeakStats {
  std::uint64_t leak_sets = 0;
  std::uint64_t closures = 0;
  LeakStats& operator+=(const LeakStats& o) {
    leak_sets += o.leak_sets;
    closures += o.closures;
    return *this;
  }
};

struct LeakyCheck {
  /// Empty iff every placement of ℓ leaks still forces the whole graph.
  std::optional<LeakCertificate> certificate;
  LeakStats stats;
  bool ok() const { return !certificate.has_value(); }
};

/// Decides whether `initial` forces g under every placement of `leaks`
/// leaks. Leak counts above g.order() behave as g.order(): placing more
/// leaks never colors more vertices, so "exactly ℓ" and "at most ℓ" agree.
///
/// On failure the certificate is the lexicographically least failing leak
/// set, independent of `workers`. On success `stats.leak_sets` equals
/// C(n, ℓ), except when `initial` already covers V and nothing is played.
LeakyCheck is_leaky_forcing_set(const Graph& g, const VertexSet& initial,
                                std::size_t leaks, unsigned workers = 1);

/// Yes/no version used inside the search. Single-threaded and
/// deterministic; `stats` accumulates the work done.
bool passes_leaky(const Graph& g, const VertexSet& initial, std::size_t leaks,
                  LeakStats& stats);

/// Vertices of degree at most ℓ. Every ℓ-leaky forcing set contains them:
/// leaking all neighbors of such a vertex leaves nobody able to force it.
VertexSet mandatory_vertices(const Graph& g, std::size_t leaks);

}  // namespace forcelab
