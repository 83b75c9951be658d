#pragma once

// Reference implementations used only by tests. They share nothing with the
// engine: adjacency is a boolean matrix, sets are bitmasks, the rule is
// applied by rescanning every vertex until nothing changes, and leaks range
// over every set of AT MOST ℓ vertices.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab::oracle {

using Mask = std::uint32_t;  // graphs up to 20 vertices

struct Matrix {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;
};

Matrix to_matrix(const Graph& g);

Mask to_mask(const VertexSet& s);
VertexSet to_set(Mask m);

/// Fixpoint of the color change rule, rescanning all vertices each round.
Mask naive_closure(const Matrix& g, Mask colored, Mask leaks);

/// Applies one uniformly random available force at a time.
Mask random_order_closure(const Matrix& g, Mask colored, Mask leaks,
                          std::mt19937_64& rng);

/// Forces under every leak set of size at most ℓ.
bool naive_is_leaky(const Matrix& g, Mask colored, std::size_t leaks);

struct NaiveSolve {
  std::size_t z;
  Mask witness;  // lexicographically least
};
/// Every subset of V, no pruning.
NaiveSolve naive_min_leaky(const Matrix& g, std::size_t leaks);

/// All passing sets of size z in lexicographic order.
std::vector<Mask> naive_minimum_sets(const Matrix& g, std::size_t leaks,
                                     std::size_t z);

/// Lexicographic order of ascending id sequences.
bool mask_lex_less(Mask a, Mask b);

}  // namespace forcelab::oracle
