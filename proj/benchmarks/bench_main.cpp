#include <benchmark/benchmark.h>

#include "cartdec/actions.hpp"
#include "cartdec/blocks.hpp"
#include "cartdec/catalog.hpp"
#include "cartdec/cartesian.hpp"
#include "cartdec/classify.hpp"
#include "cartdec/group_algorithms.hpp"
#include "cartdec/standard_groups.hpp"

using namespace cartdec;

namespace {

void stabilizer_chain(benchmark::State &state) {
  std::size_t const ell = static_cast<std::size_t>(state.range(0));
  PermGroup w = wreath_product_product_action(symmetric_group(5), ell, symmetric_group(ell));
  for (auto _ : state) {
    PermGroup fresh(w.degree(), w.generators());
    benchmark::DoNotOptimize(fresh.order());
  }
  state.SetLabel("degree " + std::to_string(w.degree()));
}
BENCHMARK(stabilizer_chain)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void invariant_partitions(benchmark::State &state) {
  Instance a6 = build_a6_on_36();
  PermGroup const &m = *a6.points->plinth;
  for (auto _ : state)
    benchmark::DoNotOptimize(all_invariant_partitions(m, 0).size());
}
BENCHMARK(invariant_partitions)->Unit(benchmark::kMillisecond);

void decomposition_search(benchmark::State &state) {
  std::size_t const ell = static_cast<std::size_t>(state.range(0));
  Instance w = build_wreath_product_action(5, ell);
  PointLevel const &p = *w.points;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_invariant_decompositions(p.group, *p.plinth, p.omega).size());
  state.SetLabel("degree " + std::to_string(p.group.degree()));
}
BENCHMARK(decomposition_search)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void coset_action_3600(benchmark::State &state) {
  Instance ex = build_instance("ex61");
  for (auto _ : state) {
    ActionMap action = coset_action(*ex.plinth, ex.system->stabilizer, {20'000, true});
    benchmark::DoNotOptimize(action.image().degree());
  }
}
BENCHMARK(coset_action_3600)->Unit(benchmark::kMillisecond);

void projection(benchmark::State &state) {
  Instance ex = build_instance("ex63");
  auto const &ks = ex.system->subgroups;
  for (auto _ : state)
    for (std::size_t i = 0; i < ex.factorization->size(); ++i)
      benchmark::DoNotOptimize(ex.factorization->project(ks[0], i).order());
}
BENCHMARK(projection)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
