#include <benchmark/benchmark.h>

#include "contalg/ideal.hpp"
#include "contalg/parse.hpp"
#include "contalg/zdgraph.hpp"

using namespace contalg;

static void BM_ring_construction(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_zn(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ring_construction)->Arg(16)->Arg(64)->Arg(256)->Complexity();

static void BM_trunc_local_construction(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(make_trunc_local(2, {"u", "v"}, 3, {}));
}
BENCHMARK(BM_trunc_local_construction);

static void BM_ideal_enumeration(benchmark::State& state) {
  RingPtr r = make_zn(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(*r));
}
BENCHMARK(BM_ideal_enumeration)->Arg(12)->Arg(36)->Arg(60);

static void BM_minimal_primes(benchmark::State& state) {
  RingPtr r = make_zn(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(*r));
}
BENCHMARK(BM_minimal_primes)->Arg(30)->Arg(60);

// the performance-sensitive kernel: bitset BFS over truncated graphs
static void BM_truncated_graph_diameter(benchmark::State& state) {
  RingPtr r = ring_from_text("Z2 x Z4");
  const auto d = static_cast<std::uint32_t>(state.range(0));
  ZDGraph g = gamma_poly_truncated(r, d);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_truncated_graph_diameter)->Arg(1)->Arg(2)->Arg(3);

static void BM_truncated_graph_build(benchmark::State& state) {
  RingPtr r = make_zn(8);
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_poly_truncated(r, d));
}
BENCHMARK(BM_truncated_graph_build)->Arg(1)->Arg(2)->Arg(3);

static void BM_mccoy_suite(benchmark::State& state) {
  RingPtr r = make_zn(6);
  MonoidPtr m = Monoid::free_comm(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(mccoy_equiv_check(r, m, 2));
}
BENCHMARK(BM_mccoy_suite);

BENCHMARK_MAIN();
