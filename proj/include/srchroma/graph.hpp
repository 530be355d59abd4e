#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srchroma {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on labelled vertices. Vertex indices follow the order in
/// which labels were declared; all "least witness" guarantees refer to it.
class Graph {
 public:
  Graph() = default;
  /// Throws ContractError on loops, duplicate edges, duplicate labels or
  /// out-of-range endpoints.
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_vertex(std::string_view label) const;
  /// Throws LookupError for an unknown label.
  Vertex index_of(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u * size() + v] != 0; }
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::vector<std::string> neighbors(std::string_view label) const;
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  std::size_t min_degree() const;
  /// Each edge once as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Subgraph induced on `keep` (kept in the given order).
  Graph induced(const std::vector<Vertex>& keep) const;

  /// Canonical edge-list text; parse_graph(to_edge_list()) reproduces the graph.
  std::string to_edge_list() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::vector<char> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Edge> edges_;
};

/// Parses the edge-list format: `v <label>`, `e <label> <label>`, `#` comments.
/// Edge endpoints must be declared by an earlier `v` line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);

/// Proper coloring with colors in {1..num_colors}, indexed by vertex.
struct Coloring {
  std::size_t num_colors = 0;
  std::vector<std::size_t> color;
};

bool is_valid_coloring(const Graph& g, const Coloring& c);

struct ChromaticResult {
  std::size_t chromatic_number = 0;
  Coloring witness;
};

/// Exact chromatic number. The witness is the lexicographically least proper
/// coloring (in vertex order) with chromatic_number colors.
ChromaticResult chromatic_number(const Graph& g);

/// Vertices of a clique found greedily; a lower bound for both chromatic numbers.
std::vector<Vertex> greedy_clique(const Graph& g);

/// Maximal subgraph of minimum degree >= 2.
Graph two_core(const Graph& g);

}  // namespace srchroma
