#include <benchmark/benchmark.h>

#include "coverlab/construction.hpp"
#include "coverlab/homology.hpp"
#include "coverlab/stanley.hpp"

using namespace coverlab;

namespace {

const char* const kFamilies[] = {"path:4", "cycle:5", "complete:4", "path:5"};

void BM_OrderedMatching(benchmark::State& state) {
  const Graph g = make_family("path:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ordered_matching_number(g));
}
BENCHMARK(BM_OrderedMatching)->DenseRange(4, 12, 4);

void BM_SymbolicPower(benchmark::State& state) {
  const Graph g = make_family("cycle:5");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(g, k));
}
BENCHMARK(BM_SymbolicPower)->DenseRange(1, 5);

// pd of S/J(G)^(k) through the Hochster sweep of the polarization.
void BM_HochsterPolarized(benchmark::State& state) {
  const Graph g = make_family(kFamilies[state.range(0)]);
  const int k = static_cast<int>(state.range(1));
  state.SetLabel(std::string(kFamilies[state.range(0)]) + " k=" + std::to_string(k));
  for (auto _ : state) benchmark::DoNotOptimize(invariants_of_quotient(g, k));
}
BENCHMARK(BM_HochsterPolarized)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_UpperKoszul(benchmark::State& state) {
  const MonomialIdeal j = symbolic_power(make_family("path:4"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(upper_koszul_betti(j));
}
BENCHMARK(BM_UpperKoszul)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Sdepth(benchmark::State& state) {
  const MonomialIdeal j = symbolic_power(make_family("path:4"), static_cast<int>(state.range(0)));
  const auto mode = state.range(1) == 0 ? PosetMode::ideal : PosetMode::quotient;
  for (auto _ : state) benchmark::DoNotOptimize(sdepth_exact(j, mode));
}
BENCHMARK(BM_Sdepth)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Sreg(benchmark::State& state) {
  const MonomialIdeal i = edge_ideal(make_family(kFamilies[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(sreg_poset(i, PosetMode::ideal));
}
BENCHMARK(BM_Sreg)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
