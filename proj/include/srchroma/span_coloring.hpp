#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srchroma/fp.hpp"
#include "srchroma/graph.hpp"

namespace srchroma {

/// Map V(G) -> F_p^dim \ {0} with f(v) outside the span of f(N(v)).
struct SpanColoring {
  Residue p = 2;
  std::size_t dim = 0;
  std::vector<FpVector> assignment;  // indexed by vertex
};

/// Throws ContractError when the assignment does not cover every vertex or
/// mixes primes/dimensions.
bool verify_span_coloring(const Graph& g, const SpanColoring& c);

/// f(v) = e_{color(v)}; valid whenever the coloring is proper.
SpanColoring span_coloring_from_coloring(const Graph& g, const Coloring& c, Residue p);

struct SpanChromaticResult {
  std::size_t span_chromatic_number = 0;
  SpanColoring witness;
  std::uint64_t nodes = 0;  // search nodes visited over all dimensions
};

/// Least-in-search-order span coloring at a fixed dimension, if one exists.
/// Vertices are processed by descending degree (ties by input order) and
/// values range over projective representatives in projective_points() order.
std::optional<SpanColoring> find_span_coloring(const Graph& g, Residue p, std::size_t dim,
                                               std::uint64_t* nodes = nullptr);
/// Same result as find_span_coloring; the second vertex's branches run in parallel.
std::optional<SpanColoring> find_span_coloring_parallel(const Graph& g, Residue p, std::size_t dim,
                                                        std::uint64_t* nodes = nullptr);

/// Exact s_p chi. Zero for the graph with no vertices.
SpanChromaticResult span_chromatic_number(const Graph& g, Residue p);
SpanChromaticResult span_chromatic_number_parallel(const Graph& g, Residue p);

/// `<label> : c1,c2,...` per vertex.
std::string format_span_coloring(const Graph& g, const SpanColoring& c);

}  // namespace srchroma
