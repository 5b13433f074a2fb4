#include <benchmark/benchmark.h>

#include "creg/classify.hpp"
#include "creg/designs.hpp"
#include "creg/regularity.hpp"
#include "creg/symmetry.hpp"

using namespace creg;

namespace {

void covering_radius_scan(benchmark::State& state) {
  const Code c = reference_code(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Code fresh(c.length(), std::vector<Mask>(c.words().begin(), c.words().end()));
    benchmark::DoNotOptimize(covering_radius(fresh));
  }
}
BENCHMARK(covering_radius_scan)->Arg(11)->Arg(12);

void complete_regularity(benchmark::State& state) {
  const Code c = reference_code(12);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_completely_regular(c, threads).completely_regular);
}
BENCHMARK(complete_regularity)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void automorphism_closure(benchmark::State& state) {
  const auto gens = code_automorphism_group(reference_code(12));
  for (auto _ : state) benchmark::DoNotOptimize(closure(gens).order());
}
BENCHMARK(automorphism_closure)->Unit(benchmark::kMillisecond);

void enumerate(benchmark::State& state, int t, int m, int k, int lambda) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_designs(t, m, k, lambda).classes.size());
}
BENCHMARK_CAPTURE(enumerate, biplane_2_11_5_2, 2, 11, 5, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate, design_3_12_6_2, 3, 12, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
