#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab::corpus {

/// One representative of every isomorphism class of graphs on n vertices,
/// 1 <= n <= 8 (1, 2, 4, 11, 34, 156, 1044, 12346 graphs). Built by
/// vertex extension and deduplicated by a canonical adjacency code. Cached.
const std::vector<Graph>& all_graphs(std::size_t n);

/// Erdos-Renyi G(n, p), deterministic in seed.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

struct Named {
  std::string name;
  Graph graph;
};

/// Family instances with at most 12 vertices, plus Q_4.
std::vector<Named> family_corpus();

}  // namespace forcelab::corpus
