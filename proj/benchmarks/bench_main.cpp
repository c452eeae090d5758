#include <benchmark/benchmark.h>

#include <random>

#include "mafre/approx.hpp"
#include "mafre/dual.hpp"
#include "mafre/fre.hpp"
#include "support/fixtures.hpp"

using namespace mafre;

namespace {

// Random context with |A| attributes and |B| objects over [0,1]_n.
Context random_context(int n, std::size_t a, std::size_t b, unsigned seed) {
  std::mt19937 rng(seed);
  oracle::Toy toy;
  toy.n = n;
  toy.r = oracle::random_mat(rng, n, a, b);
  toy.sigma.assign(a, std::vector<std::string>(b));
  for (auto& row : toy.sigma) {
    for (auto& name : row) name = oracle::random_triple(rng);
  }
  return oracle::to_context(toy);
}

void BM_Lattice(benchmark::State& state) {
  const auto strategy = static_cast<LatticeStrategy>(state.range(0));
  const Context ctx = random_context(static_cast<int>(state.range(1)), 4, 4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extent_set(ctx, strategy));
  }
  state.SetLabel(to_string(strategy));
}
BENCHMARK(BM_Lattice)
    ->ArgsProduct({{static_cast<long>(LatticeStrategy::kObjectClosure),
                    static_cast<long>(LatticeStrategy::kAttributeImage),
                    static_cast<long>(LatticeStrategy::kNextClosure)},
                   {3, 5}})
    ->Unit(benchmark::kMillisecond);

void BM_ExampleLattice(benchmark::State& state) {
  const auto fre = oracle::to_instance(fixtures::solvable_example());
  const Context y1 = restrict(associated_context(fre), {0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(build_concept_lattice(y1));
}
BENCHMARK(BM_ExampleLattice)->Unit(benchmark::kMillisecond);

void BM_Reducts(benchmark::State& state) {
  const auto fre = oracle::to_instance(fixtures::max_min_example());
  const Context ctx = associated_context(fre);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reducts(ctx));
}
BENCHMARK(BM_Reducts)->Unit(benchmark::kMillisecond);

void BM_RandomReducts(benchmark::State& state) {
  const Context ctx = random_context(4, static_cast<std::size_t>(state.range(0)), 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reducts(ctx));
}
BENCHMARK(BM_RandomReducts)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EnumerateCount(benchmark::State& state) {
  const auto fre = oracle::to_instance(fixtures::max_min_example());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(fre).total_count());
}
BENCHMARK(BM_EnumerateCount)->Unit(benchmark::kMillisecond);

void BM_EnumerateMaterialized(benchmark::State& state) {
  const auto fre = oracle::to_instance(fixtures::max_min_example());
  EnumerationOptions o;
  o.materialize = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(fre, o));
}
BENCHMARK(BM_EnumerateMaterialized)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto fre = oracle::to_instance(fixtures::max_min_example());
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solutions(fre));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

void BM_Approximate(benchmark::State& state) {
  const auto fre = oracle::to_instance(fixtures::unsolvable_example());
  for (auto _ : state) benchmark::DoNotOptimize(approximate_by_reduct(fre, {0, 1, 2}));
}
BENCHMARK(BM_Approximate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
