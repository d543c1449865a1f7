#include <benchmark/benchmark.h>

#include <random>

#include "gablab/deephole.hpp"

namespace {

using namespace gablab;

std::vector<Elem> power_points(const Field& f, unsigned n) {
  std::vector<Elem> g;
  std::uint32_t c = 1;
  for (unsigned i = 0; i < n; ++i, c *= f.p()) g.push_back(Elem{c});
  return g;
}

std::vector<Elem> random_elems(const Field& f, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Elem> v(count);
  for (auto& e : v) e = Elem{static_cast<std::uint32_t>(rng() % f.order())};
  return v;
}

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::create(2, 1, static_cast<unsigned>(state.range(0)));
  const auto a = random_elems(f, 1024, 1), b = random_elems(f, 1024, 2);
  for (auto _ : state) {
    Elem acc = f.one();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(22);

void BM_SpanDim(benchmark::State& state) {
  const Field f = Field::create(2, 1, 8);
  const auto w = random_elems(f, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(f.span_dim(w));
}
BENCHMARK(BM_SpanDim)->Arg(4)->Arg(8);

void BM_Annihilator(benchmark::State& state) {
  const Field f = Field::create(2, 1, 8);
  const auto g = power_points(f, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(annihilator(f, g));
}
BENCHMARK(BM_Annihilator)->Arg(4)->Arg(8);

GabidulinCode gf16_code() {
  Field f = Field::create(2, 1, 4);
  auto g = power_points(f, 4);
  return GabidulinCode(std::move(f), std::move(g), 2);
}

void BM_DistanceSearch(benchmark::State& state) {
  const GabidulinCode c = gf16_code();
  const auto words = random_elems(c.field(), 4 * 64, 4);
  for (auto _ : state)
    for (std::size_t i = 0; i < 64; ++i)
      benchmark::DoNotOptimize(
          distance_by_search(c, std::span(words).subspan(4 * i, 4), Metric::rank).distance);
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_DistanceSearch);

void BM_DistanceOracle(benchmark::State& state) {
  const GabidulinCode c = gf16_code();
  const auto words = random_elems(c.field(), 4 * 64, 4);
  for (auto _ : state)
    for (std::size_t i = 0; i < 64; ++i)
      benchmark::DoNotOptimize(
          dist_to_code_exhaustive(c, std::span(words).subspan(4 * i, 4), Metric::rank).distance);
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_DistanceOracle);

void BM_CoveringScan(benchmark::State& state) {
  const GabidulinCode c = gf16_code();
  for (auto _ : state) benchmark::DoNotOptimize(covering_radius_scan(c, Metric::rank).radius);
}
BENCHMARK(BM_CoveringScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
