#include "srchroma/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "srchroma/errors.hpp"

namespace srchroma {

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (Vertex v = 0; v < n; ++v)
    if (!index_.emplace(labels_[v], v).second) throw ContractError("duplicate vertex '" + labels_[v] + "'");
  adjacency_.assign(n * n, 0);
  neighbors_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("loop edge at '" + labels_[u] + "'");
    if (adjacency_[u * n + v]) throw ContractError("duplicate edge " + labels_[u] + " " + labels_[v]);
    adjacency_[u * n + v] = adjacency_[v * n + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_vertex(std::string_view label) const { return index_.find(label) != index_.end(); }

Vertex Graph::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw LookupError("unknown vertex '" + std::string(label) + "'");
  return it->second;
}

std::vector<std::string> Graph::neighbors(std::string_view label) const {
  std::vector<std::string> out;
  for (Vertex u : neighbors(index_of(label))) out.push_back(labels_[u]);
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t m = empty() ? 0 : degree(0);
  for (Vertex v = 1; v < size(); ++v) m = std::min(m, degree(v));
  return m;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<std::string> labels;
  std::vector<std::size_t> pos(size(), size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(labels_.at(keep[i]));
    pos[keep[i]] = i;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (pos[u] < size() && pos[v] < size()) edges.emplace_back(pos[u], pos[v]);
  return Graph(std::move(labels), edges);
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  for (const auto& l : labels_) out << "v " << l << '\n';
  for (auto [u, v] : edges_) out << "e " << labels_[u] << ' ' << labels_[v] << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::map<std::string, Vertex, std::less<>> index;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'v <label>'");
      if (index.count(tok[1])) throw ParseError(lineno, "duplicate vertex '" + tok[1] + "'");
      index.emplace(tok[1], labels.size());
      labels.push_back(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e <label> <label>'");
      if (tok[1] == tok[2]) throw ParseError(lineno, "loop edge at '" + tok[1] + "'");
      auto a = index.find(tok[1]), b = index.find(tok[2]);
      if (a == index.end()) throw ParseError(lineno, "unknown vertex '" + tok[1] + "'");
      if (b == index.end()) throw ParseError(lineno, "unknown vertex '" + tok[2] + "'");
      Edge e{std::min(a->second, b->second), std::max(a->second, b->second)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
      edges.push_back(e);
    } else {
      throw ParseError(lineno, "unrecognised record '" + tok[0] + "'");
    }
  }
  return Graph(std::move(labels), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

namespace {

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(numbered_labels(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ContractError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(numbered_labels(n), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(numbered_labels(n), edges);
}

Graph edgeless_graph(std::size_t n) { return Graph(numbered_labels(n), {}); }

bool is_valid_coloring(const Graph& g, const Coloring& c) {
  if (c.color.size() != g.size()) return false;
  for (auto col : c.color)
    if (col < 1 || col > c.num_colors) return false;
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> best;
  for (Vertex start = 0; start < g.size(); ++start) {
    std::vector<Vertex> clique{start};
    std::vector<Vertex> cand = g.neighbors(start);
    while (!cand.empty()) {
      // extend by the candidate with most neighbours among the candidates
      Vertex pick = cand.front();
      std::size_t pick_score = 0;
      for (Vertex c : cand) {
        std::size_t score = 0;
        for (Vertex d : cand) score += g.adjacent(c, d);
        if (score > pick_score) {
          pick = c;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::vector<Vertex> next;
      for (Vertex c : cand)
        if (c != pick && g.adjacent(c, pick)) next.push_back(c);
      cand = std::move(next);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

// DSATUR branch and bound; `best` shrinks as better colorings are found.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, std::size_t lower, std::size_t upper)
      : g_(g), lower_(lower), best_(upper), color_(g.size(), 0) {}

  std::size_t run() {
    recurse(0, 0);
    return best_;
  }

 private:
  void recurse(std::size_t colored, std::size_t used) {
    if (best_ <= lower_) return;
    if (colored == g_.size()) {
      best_ = used;
      return;
    }
    Vertex pick = g_.size();
    std::size_t pick_sat = 0, pick_deg = 0;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (color_[v]) continue;
      std::vector<char> seen(used + 2, 0);
      std::size_t sat = 0;
      for (Vertex u : g_.neighbors(v))
        if (color_[u] && !seen[color_[u]]) {
          seen[color_[u]] = 1;
          ++sat;
        }
      if (pick == g_.size() || sat > pick_sat || (sat == pick_sat && g_.degree(v) > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = g_.degree(v);
      }
    }
    for (std::size_t c = 1; c <= std::min(used + 1, best_ - 1); ++c) {
      bool ok = true;
      for (Vertex u : g_.neighbors(pick))
        if (color_[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[pick] = c;
      recurse(colored + 1, std::max(used, c));
      color_[pick] = 0;
      if (best_ <= lower_) return;
    }
  }

  const Graph& g_;
  std::size_t lower_;
  std::size_t best_;
  std::vector<std::size_t> color_;
};

bool least_coloring(const Graph& g, std::size_t k, Vertex v, std::vector<std::size_t>& color) {
  if (v == g.size()) return true;
  for (std::size_t c = 1; c <= k; ++c) {
    bool ok = true;
    for (Vertex u : g.neighbors(v))
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (least_coloring(g, k, v + 1, color)) return true;
  }
  color[v] = 0;
  return false;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
  ChromaticResult result;
  if (g.empty()) return result;
  const std::size_t lower = std::max<std::size_t>(1, greedy_clique(g).size());
  const std::size_t chi = DsaturSearch(g, lower, g.size() + 1).run();
  std::vector<std::size_t> color(g.size(), 0);
  if (!least_coloring(g, chi, 0, color)) throw std::logic_error("chromatic_number: no coloring at computed bound");
  result.chromatic_number = chi;
  result.witness = Coloring{chi, std::move(color)};
  return result;
}

Graph two_core(const Graph& g) {
  std::vector<std::size_t> deg(g.size());
  std::vector<char> alive(g.size(), 1);
  for (Vertex v = 0; v < g.size(); ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!alive[v] || deg[v] >= 2) continue;
      alive[v] = 0;
      changed = true;
      for (Vertex u : g.neighbors(v))
        if (alive[u]) --deg[u];
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.size(); ++v)
    if (alive[v]) keep.push_back(v);
  return g.induced(keep);
}

}  // namespace srchroma
