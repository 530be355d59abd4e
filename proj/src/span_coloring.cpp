#include "srchroma/span_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "srchroma/errors.hpp"

namespace srchroma {

bool verify_span_coloring(const Graph& g, const SpanColoring& c) {
  if (c.assignment.size() != g.size()) throw ContractError("span coloring does not assign every vertex");
  for (const auto& v : c.assignment)
    if (v.prime() != c.p || v.dim() != c.dim) throw ContractError("span coloring: prime/dimension mismatch");
  for (Vertex v = 0; v < g.size(); ++v) {
    if (c.assignment[v].is_zero()) return false;
    EchelonBasis basis(c.p, c.dim);
    for (Vertex u : g.neighbors(v)) basis.insert(c.assignment[u].coords());
    if (basis.contains(c.assignment[v].coords())) return false;
  }
  return true;
}

SpanColoring span_coloring_from_coloring(const Graph& g, const Coloring& c, Residue p) {
  SpanColoring s{p, c.num_colors, {}};
  for (Vertex v = 0; v < g.size(); ++v) s.assignment.push_back(FpVector::unit(p, c.num_colors, c.color.at(v) - 1));
  return s;
}

namespace {

class SpanSearch {
 public:
  SpanSearch(const Graph& g, Residue p, std::size_t dim)
      : g_(g), p_(p), dim_(dim), points_(projective_points(p, dim)), value_(g.size(), kUnset) {
    order_.resize(g.size());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  const std::vector<Vertex>& order() const { return order_; }
  std::size_t point_count() const { return points_.size(); }
  std::uint64_t nodes() const { return nodes_; }

  /// Tries to place points_[choice] on the vertex at `depth`; undone by clear().
  bool place(std::size_t depth, std::size_t choice) {
    ++nodes_;
    Vertex v = order_[depth];
    value_[v] = choice;
    if (consistent_after(v)) return true;
    value_[v] = kUnset;
    return false;
  }
  void clear(std::size_t depth) { value_[order_[depth]] = kUnset; }

  bool complete_from(std::size_t depth) {
    if (depth == order_.size()) return true;
    // e_1 suffices for the first vertex: GL_n acts transitively on nonzero vectors.
    const std::size_t limit = depth == 0 ? 1 : points_.size();
    for (std::size_t choice = 0; choice < limit; ++choice) {
      if (!place(depth, choice)) continue;
      if (complete_from(depth + 1)) return true;
      clear(depth);
    }
    return false;
  }

  SpanColoring witness() const {
    SpanColoring c{p_, dim_, {}};
    for (Vertex v = 0; v < g_.size(); ++v) c.assignment.push_back(points_[value_[v]]);
    return c;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  EchelonBasis assigned_span(Vertex v) const {
    EchelonBasis basis(p_, dim_);
    for (Vertex u : g_.neighbors(v))
      if (value_[u] != kUnset) basis.insert(points_[value_[u]].coords());
    return basis;
  }

  bool consistent_after(Vertex v) const {
    if (assigned_span(v).contains(points_[value_[v]].coords())) return false;
    for (Vertex u : g_.neighbors(v)) {
      EchelonBasis basis = assigned_span(u);
      if (value_[u] != kUnset) {
        if (basis.contains(points_[value_[u]].coords())) return false;
      } else if (basis.full()) {
        return false;
      }
    }
    return true;
  }

  const Graph& g_;
  Residue p_;
  std::size_t dim_;
  std::vector<FpVector> points_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> value_;
  std::uint64_t nodes_ = 0;
};

void check_prime(Residue p) {
  if (!is_prime(p)) throw ContractError("span coloring needs a prime field, got " + std::to_string(p));
}

std::size_t lower_bound_dim(const Graph& g) { return std::max<std::size_t>(1, greedy_clique(g).size()); }

}  // namespace

std::optional<SpanColoring> find_span_coloring(const Graph& g, Residue p, std::size_t dim, std::uint64_t* nodes) {
  check_prime(p);
  if (dim == 0) return g.empty() ? std::optional<SpanColoring>(SpanColoring{p, 0, {}}) : std::nullopt;
  SpanSearch search(g, p, dim);
  bool ok = search.complete_from(0);
  if (nodes) *nodes += search.nodes();
  if (!ok) return std::nullopt;
  return search.witness();
}

std::optional<SpanColoring> find_span_coloring_parallel(const Graph& g, Residue p, std::size_t dim,
                                                        std::uint64_t* nodes) {
  check_prime(p);
  if (g.size() < 2 || dim == 0) return find_span_coloring(g, p, dim, nodes);
  const std::size_t branches = projective_points(p, dim).size();
  std::vector<std::optional<SpanColoring>> found(branches);
  std::vector<std::uint64_t> counts(branches, 0);
  // Branch b fixes the second vertex to point b; the serial search visits
  // branches in the same order, so the least successful b gives its witness.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(branches); ++b) {
    SpanSearch search(g, p, dim);
    if (search.place(0, 0) && search.place(1, static_cast<std::size_t>(b)) && search.complete_from(2))
      found[static_cast<std::size_t>(b)] = search.witness();
    counts[static_cast<std::size_t>(b)] = search.nodes();
  }
  if (nodes) *nodes += std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

namespace {

template <class Finder>
SpanChromaticResult span_chromatic_with(const Graph& g, Residue p, Finder&& find) {
  check_prime(p);
  SpanChromaticResult result;
  result.witness.p = p;
  if (g.empty()) return result;
  for (std::size_t dim = lower_bound_dim(g);; ++dim) {
    if (auto w = find(g, p, dim, &result.nodes)) {
      result.span_chromatic_number = dim;
      result.witness = std::move(*w);
      return result;
    }
  }
}

}  // namespace

SpanChromaticResult span_chromatic_number(const Graph& g, Residue p) {
  return span_chromatic_with(g, p, [](const Graph& gg, Residue pp, std::size_t d, std::uint64_t* n) {
    return find_span_coloring(gg, pp, d, n);
  });
}

SpanChromaticResult span_chromatic_number_parallel(const Graph& g, Residue p) {
  return span_chromatic_with(g, p, [](const Graph& gg, Residue pp, std::size_t d, std::uint64_t* n) {
    return find_span_coloring_parallel(gg, pp, d, n);
  });
}

std::string format_span_coloring(const Graph& g, const SpanColoring& c) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.size(); ++v) out << g.label(v) << " : " << c.assignment.at(v).to_string() << '\n';
  return out.str();
}

}  // namespace srchroma
