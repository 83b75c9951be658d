#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcelab/vertex_set.hpp"

namespace forcelab {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency rows are VertexSets, so neighborhood queries are a handful of
/// word operations. The constructor rejects loops and out-of-range ids and
/// collapses duplicate edges.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                            edges.size())) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const;

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  /// Throws UsageError when v is not a vertex.
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;

  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Parses the edge-list text format.
///
/// One edge "u v" per line; blank lines and lines starting with '#' are
/// skipped. An optional "n <count>" line fixes the vertex count, otherwise it
/// is one more than the largest id seen. Duplicate edges collapse; a
/// self-loop or a non-integer token raises ParseError.
Graph parse_edge_list(std::string_view text);

/// Writes "n <count>" followed by one "u v" line per edge (u < v).
std::string to_edge_list(const Graph& g);

/// Reads a file and hands it to parse_edge_list.
Graph read_edge_list(const std::string& path);

inline VertexSet complement_set(const VertexSet& s, std::size_t n) {
  return s.complement(n);
}

/// Subgraph induced on `keep`; vertex ids are preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace forcelab
