#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

// Every generator fixes its vertex-id layout so constructions can be written
// down by formula. Out-of-domain parameters throw UsageError.

/// Q_d for 1 <= d <= 7. Vertex id = the 0/1 sequence read as a binary
/// number, first position in bit 0; ids adjacent iff they differ in one bit.
Graph hypercube(std::size_t d);

/// Sequences whose first position is 0, i.e. the even ids of hypercube(d).
VertexSet half_cube_set(std::size_t d);

/// GP(n, k) for n >= 3, 1 <= k <= (n-1)/2.
///   outer cycle U: u_{i+1} = i,     i ~ (i+1) mod n
///   inner X:       x_{i+1} = n + i, n+i ~ n + ((i+k) mod n)
///   spokes:        i ~ n+i
Graph generalized_petersen(std::size_t n, std::size_t k);

/// Inner vertex set X = {n, ..., 2n-1} of generalized_petersen(n, k).
VertexSet petersen_inner(std::size_t n);
/// Outer cycle U = {0, ..., n-1}.
VertexSet petersen_outer(std::size_t n);

/// K_{m,n}: X = {0..m-1}, Y = {m..m+n-1}.
Graph complete_bipartite(std::size_t m, std::size_t n);

/// W_n: cycle on 0..n-1, hub n.
Graph wheel(std::size_t n);

/// P_n: 0 - 1 - ... - (n-1).
Graph path(std::size_t n);

/// C_n for n >= 3: i ~ (i+1) mod n.
Graph cycle(std::size_t n);

/// Labeled tree on n vertices, uniform over the n^(n-2) labeled trees.
///
/// The Pruefer sequence has n-2 entries; entry j is `next() % n` where
/// `next` is std::mt19937_64 seeded with `seed` (the standard guarantees the
/// output stream, so a seed names the same tree everywhere). The sequence is
/// decoded with the usual smallest-leaf rule. n = 1 gives K_1, n = 2 a single
/// edge.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Human-readable id layout of every family, for `families --describe`.
struct FamilyDescription {
  std::string name;
  std::string parameters;
  std::string layout;
};
std::vector<FamilyDescription> describe_families();

}  // namespace forcelab
