#include "forcelab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "forcelab/errors.hpp"

namespace forcelab {

Graph::Graph(std::size_t n,
             std::span<const std::pair<Vertex, Vertex>> edges)
    : adj_(n) {
  if (n > kMaxVertices)
    throw UsageError("graph has " + std::to_string(n) +
                     " vertices; at most " + std::to_string(kMaxVertices) +
                     " are supported");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw UsageError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") leaves the vertex range");
    if (u == v)
      throw UsageError("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= order())
    throw UsageError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(order()) + ")");
  return adj_[v].size();
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adj_) best = std::max(best, row.size());
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

bool parse_id(std::string_view tok, std::size_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    if (i > start) toks.push_back(line.substr(start, i - start));
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t declared = 0;
  bool has_header = false;
  std::size_t max_id = 0;
  bool any_id = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2)
      throw ParseError(line_no, "expected two tokens, got " +
                                    std::to_string(toks.size()));
    if (toks[0] == "n") {
      if (!parse_id(toks[1], declared))
        throw ParseError(line_no, "vertex count '" + std::string(toks[1]) +
                                      "' is not a nonnegative integer");
      has_header = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (!parse_id(toks[0], u) || !parse_id(toks[1], v))
      throw ParseError(line_no, "non-integer vertex id in '" +
                                    std::string(line) + "'");
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u >= kMaxVertices || v >= kMaxVertices)
      throw ParseError(line_no, "vertex id exceeds capacity " +
                                    std::to_string(kMaxVertices));
    max_id = std::max({max_id, u, v});
    any_id = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  std::size_t n = any_id ? max_id + 1 : 0;
  if (has_header) {
    if (declared < n)
      throw ParseError(0, "header declares " + std::to_string(declared) +
                              " vertices but id " + std::to_string(max_id) +
                              " appears");
    n = declared;
  }
  if (n > kMaxVertices)
    throw ParseError(0, "vertex count exceeds capacity " +
                            std::to_string(kMaxVertices));
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

}  // namespace forcelab
