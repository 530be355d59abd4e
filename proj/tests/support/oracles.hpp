#pragma once
// Independent reference computations used by unit and acceptance tests. Nothing
// here calls the solvers under test; linear algebra is redone from scratch.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "srchroma/graph.hpp"

namespace oracle {

using srchroma::Edge;
using srchroma::Graph;

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> edges;
  const auto pairs = all_pairs(n);
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (mask >> b & 1) edges.push_back(pairs[b]);
  return Graph(labels, edges);
}

inline bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : g.neighbors(v))
      if (!seen[u]) seen[u] = 1, stack.push_back(u);
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

/// Smallest edge mask over all relabelings.
inline std::uint64_t canonical_mask(std::size_t n, std::uint64_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<std::vector<int>> bit(n, std::vector<int>(n, -1));
  for (std::size_t b = 0; b < pairs.size(); ++b) bit[pairs[b].first][pairs[b].second] = static_cast<int>(b);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (!(mask >> b & 1)) continue;
      auto u = perm[pairs[b].first], v = perm[pairs[b].second];
      if (u > v) std::swap(u, v);
      m |= std::uint64_t{1} << bit[u][v];
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of connected graphs on 1..max_n vertices.
inline std::vector<Graph> connected_graphs_up_to_iso(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      auto c = canonical_mask(n, mask);
      if (!seen.insert(c).second) continue;
      Graph g = graph_from_mask(n, c);
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < n * (n - 1) / 2; ++b)
    if (coin(rng)) mask |= std::uint64_t{1} << b;
  return graph_from_mask(n, mask);
}

// --- chromatic number by exhaustive assignment ---------------------------------

inline bool colorable(const Graph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<std::size_t> col(n, 0);
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (col[u] == col[v]) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++col[i] == k) col[i++] = 0;
    if (i == n) return false;
  }
}

inline std::size_t chromatic(const Graph& g) {
  std::size_t k = 0;
  while (!colorable(g, k)) ++k;
  return k;
}

// --- F_p linear algebra ------------------------------------------------------

using Vec = std::vector<std::uint32_t>;

inline std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

inline std::size_t rank(std::vector<Vec> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const auto inv = inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + p * p - f * rows[r][j]) % p;
    }
    ++r;
  }
  return r;
}

inline bool in_span(const std::vector<Vec>& vs, const Vec& t, std::uint32_t p) {
  auto with = vs;
  with.push_back(t);
  return rank(with, p) == rank(vs, p);
}

/// Nonzero vectors of F_p^dim whose first nonzero coordinate is 1.
inline std::vector<Vec> projective(std::uint32_t p, std::size_t dim) {
  std::vector<Vec> out;
  Vec v(dim, 0);
  while (true) {
    std::size_t i = 0;
    while (i < dim && ++v[i] == p) v[i++] = 0;
    if (i == dim) break;
    auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (*lead == 1) out.push_back(v);
  }
  return out;
}

inline bool span_valid(const Graph& g, const std::vector<Vec>& f, std::uint32_t p) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::vector<Vec> nb;
    for (auto u : g.neighbors(v)) nb.push_back(f[u]);
    if (in_span(nb, f[v], p)) return false;
  }
  return true;
}

/// Exhaustive over projective assignments. The first vertex is pinned to a
/// single point: GL(n) is transitive on nonzero vectors and preserves validity.
inline bool span_colorable(const Graph& g, std::uint32_t p, std::size_t dim) {
  const std::size_t n = g.size();
  if (n == 0) return true;
  const auto pts = projective(p, dim);
  std::vector<std::size_t> idx(n, 0);
  std::vector<Vec> f(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) f[v] = pts[idx[v]];
    if (span_valid(g, f, p)) return true;
    std::size_t i = 1;
    while (i < n && ++idx[i] == pts.size()) idx[i++] = 0;
    if (i >= n) return false;
  }
}

inline std::size_t span_chromatic(const Graph& g, std::uint32_t p) {
  if (g.empty()) return 0;
  std::size_t d = 1;
  while (!span_colorable(g, p, d)) ++d;
  return d;
}

}  // namespace oracle
