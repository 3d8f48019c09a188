#include <benchmark/benchmark.h>

#include <vector>

#include "boxlab/discord2.hpp"
#include "boxlab/polytope.hpp"
#include "boxlab/qstate.hpp"
#include "boxlab/random.hpp"
#include "boxlab/tribox.hpp"

using namespace boxlab;

namespace {

std::vector<BipartiteBox> sample_boxes(int n) {
  Rng rng(7);
  std::vector<BipartiteBox> v;
  for (int i = 0; i < n; ++i) v.push_back(random_ns_box(rng));
  return v;
}

std::vector<TripartiteBox> sample_boxes3(int n) {
  Rng rng(8);
  std::vector<TripartiteBox> v;
  for (int i = 0; i < n; ++i) v.push_back(random_svetlichny_polytope_box(rng));
  return v;
}

void BM_BellMerminDiscord(benchmark::State& state) {
  const auto boxes = sample_boxes(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& P = boxes[i++ % boxes.size()];
    benchmark::DoNotOptimize(bell_discord(P) + mermin_discord(P));
  }
}
BENCHMARK(BM_BellMerminDiscord);

void BM_Measures2(benchmark::State& state) {
  const auto boxes = sample_boxes(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(measures(boxes[i++ % boxes.size()]));
}
BENCHMARK(BM_Measures2);

void BM_LocalityLp(benchmark::State& state) {
  const auto boxes = sample_boxes(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_local(boxes[i++ % boxes.size()]).inside);
}
BENCHMARK(BM_LocalityLp);

void BM_ThreeDecomposition(benchmark::State& state) {
  const auto boxes = sample_boxes(256);
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(three_decomposition(boxes[i++ % boxes.size()]).mu);
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_ThreeDecomposition);

void BM_BornBox2(benchmark::State& state) {
  Rng rng(9);
  const DensityMatrix rho = random_mixed_state(rng, 2);
  const MeasurementSettings s = random_settings(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(born_box2(rho, s));
}
BENCHMARK(BM_BornBox2);

void BM_BornBox2Bloch(benchmark::State& state) {
  Rng rng(9);
  const BlochData d = bloch_data(random_mixed_state(rng, 2));
  const MeasurementSettings s = random_settings(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(born_box2(d, s));
}
BENCHMARK(BM_BornBox2Bloch);

void BM_BornBox3(benchmark::State& state) {
  Rng rng(10);
  const DensityMatrix rho = random_mixed_state(rng, 3);
  const MeasurementSettings s = random_settings(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(born_box3(rho, s));
}
BENCHMARK(BM_BornBox3);

void BM_Measures3(benchmark::State& state) {
  const auto boxes = sample_boxes3(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(measures3(boxes[i++ % boxes.size()]));
}
BENCHMARK(BM_Measures3);

void BM_SvetlichnyPolytopeLp(benchmark::State& state) {
  const auto boxes = sample_boxes3(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(in_svetlichny_polytope(boxes[i++ % boxes.size()]));
}
BENCHMARK(BM_SvetlichnyPolytopeLp);

}  // namespace

BENCHMARK_MAIN();
