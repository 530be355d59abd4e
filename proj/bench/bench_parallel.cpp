// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "srchroma/realizability.hpp"
#include "srchroma/span_coloring.hpp"
#include "srchroma/steenrod.hpp"

using namespace srchroma;

namespace {

// Circulant graph on n vertices joining i to i+1 and i+2; clique number 3.
Graph circulant(std::size_t n) {
  std::string text;
  for (std::size_t i = 0; i < n; ++i) text += "v " + std::to_string(i) + "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t step : {1u, 2u}) text += "e " + std::to_string(i) + " " + std::to_string((i + step) % n) + "\n";
  return parse_graph(text);
}

void BM_SpanChromaticSerial(benchmark::State& state) {
  const Graph g = circulant(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(span_chromatic_number(g, 3).span_chromatic_number);
}

void BM_SpanChromaticParallel(benchmark::State& state) {
  const Graph g = circulant(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(span_chromatic_number_parallel(g, 3).span_chromatic_number);
}

const SteenrodTable& found_table() {
  static const SteenrodTable table = [] {
    auto r = search_action(make_complex({Family::B, 3, {2}}, cycle_graph(4)), 3);
    return *r.table;
  }();
  return table;
}

void BM_CheckRelationsSerial(benchmark::State& state) {
  const auto& t = found_table();
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(t, RelationSet{}, default_degree_bound(3)).ok());
}

void BM_CheckRelationsParallel(benchmark::State& state) {
  const auto& t = found_table();
  for (auto _ : state)
    benchmark::DoNotOptimize(check_relations_parallel(t, RelationSet{}, default_degree_bound(3)).ok());
}

struct PartitionCase {
  JoinComplex cx;
  Partition part;
};

PartitionCase partition_case(std::size_t n) {
  const Graph g = circulant(n);
  const auto chi = chromatic_number(g);
  const auto size = static_cast<unsigned>(chi.chromatic_number);
  auto cx = build_complex({Family::Ap, 5, {size, size, size, size}}, g);
  auto part = partition_from_coloring(cx, chi.witness);
  return {std::move(cx), std::move(part)};
}

void BM_VerifyPartitionSerial(benchmark::State& state) {
  const auto c = partition_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_partition(c.cx, c.part, Scheme::A, 5));
}

void BM_VerifyPartitionParallel(benchmark::State& state) {
  const auto c = partition_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_partition_parallel(c.cx, c.part, Scheme::A, 5));
}

}  // namespace

BENCHMARK(BM_SpanChromaticSerial)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanChromaticParallel)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckRelationsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckRelationsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPartitionSerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPartitionParallel)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
