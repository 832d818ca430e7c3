#include <benchmark/benchmark.h>

#include "rackkit/classify.hpp"
#include "rackkit/coloring.hpp"
#include "rackkit/enumerate.hpp"
#include "rackkit/invariants.hpp"
#include "rackkit/iso.hpp"
#include "rackkit/rack.hpp"

namespace {

using namespace rackkit;

void BM_CheckAxioms(benchmark::State& state) {
  Rack r = dihedral_rack(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(r.perms()).is_rack);
}
BENCHMARK(BM_CheckAxioms)->Arg(5)->Arg(9)->Arg(15);

void BM_CanonicalForm(benchmark::State& state) {
  Rack r = state.range(0) == 6 ? octahedron_quandle()
                               : linear_alexander(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(r));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6)->Arg(7);

void BM_AreIsomorphic(benchmark::State& state) {
  Rack a = octahedron_quandle();
  Rack b = relabel(a, Perm::parse_cycles(6, "(1 4 2 6 3 5)"));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b).isomorphic);
}
BENCHMARK(BM_AreIsomorphic);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    auto report = enumerate_racks(static_cast<int>(state.range(0)), EnumMode::racks);
    benchmark::DoNotOptimize(report.classes.size());
  }
}
BENCHMARK(BM_Enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_QuandleSearch(benchmark::State& state) {
  for (auto _ : state) {
    auto found = quandle_search_1_nm1(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(found.size());
  }
}
BENCHMARK(BM_QuandleSearch)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Connectivity(benchmark::State& state) {
  Rack r = dihedral_rack(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(connectivity(r).c);
}
BENCHMARK(BM_Connectivity)->Arg(9)->Arg(25);

void BM_ColoringTrefoil(benchmark::State& state) {
  KnotDiagram trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  Rack target = dihedral_rack(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_colorings(trefoil, target).total);
}
BENCHMARK(BM_ColoringTrefoil)->Arg(3)->Arg(9)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
