#include "forcelab/families.hpp"

#include <queue>
#include <random>

#include "forcelab/errors.hpp"

namespace forcelab {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph hypercube(std::size_t d) {
  if (d < 1 || d > 7)
    throw UsageError("hypercube dimension must be in [1, 7], got " +
                     std::to_string(d));
  const std::size_t n = std::size_t{1} << d;
  EdgeList edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      const Vertex u = v ^ (Vertex{1} << b);
      if (v < u) edges.emplace_back(v, u);
    }
  return Graph(n, edges);
}

VertexSet half_cube_set(std::size_t d) {
  if (d < 1 || d > 7)
    throw UsageError("hypercube dimension must be in [1, 7], got " +
                     std::to_string(d));
  VertexSet s;
  for (Vertex v = 0; v < (Vertex{1} << d); v += 2) s.insert(v);
  return s;
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3) throw UsageError("GP(n, k) needs n >= 3");
  if (k < 1 || k > (n - 1) / 2)
    throw UsageError("GP(" + std::to_string(n) + ", k) needs 1 <= k <= " +
                     std::to_string((n - 1) / 2) + ", got k = " +
                     std::to_string(k));
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + k) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph(2 * n, edges);
}

VertexSet petersen_inner(std::size_t n) {
  return VertexSet::range(2 * n) - VertexSet::range(n);
}

VertexSet petersen_outer(std::size_t n) { return VertexSet::range(n); }

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw UsageError("K_{m,n} needs m, n >= 1");
  EdgeList edges;
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y = 0; y < n; ++y) edges.emplace_back(x, m + y);
  return Graph(m + n, edges);
}

Graph wheel(std::size_t n) {
  if (n < 3) throw UsageError("W_n needs n >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n);
  }
  return Graph(n + 1, edges);
}

Graph path(std::size_t n) {
  if (n < 1) throw UsageError("P_n needs n >= 1");
  EdgeList edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw UsageError("C_n needs n >= 3");
  EdgeList edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw UsageError("a tree needs n >= 1");
  if (n <= 2) return path(n);

  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % n);

  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.push(v);

  EdgeList edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--remaining[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

std::vector<FamilyDescription> describe_families() {
  return {
      {"hypercube", "--d D (1..7)",
       "id = 0/1 sequence as binary, first position = bit 0; half-cube Q = "
       "even ids"},
      {"gp", "--n N (>=3) --k K (1..(N-1)/2)",
       "u_(i+1) = i on the outer cycle, x_(i+1) = N+i inner, spoke i ~ N+i; "
       "X = {N..2N-1}"},
      {"bipartite", "--m M --n N",
       "X = {0..M-1}, Y = {M..M+N-1}, every X-Y pair adjacent"},
      {"wheel", "--n N (>=3)", "cycle 0..N-1, hub N"},
      {"path", "--n N (>=1)", "0 - 1 - ... - (N-1)"},
      {"cycle", "--n N (>=3)", "i ~ (i+1) mod N"},
      {"tree", "--n N (>=1) --seed S",
       "Pruefer sequence from mt19937_64(S) outputs mod N, smallest-leaf "
       "decoding"},
  };
}

}  // namespace forcelab
