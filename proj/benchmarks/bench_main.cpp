#include <corners/complex.hpp>
#include <corners/fibre.hpp>
#include <corners/orient.hpp>
#include <corners/poly.hpp>
#include <corners/random.hpp>

#include <benchmark/benchmark.h>

using namespace corners;

namespace {

std::vector<std::pair<CornerMapGerm, CornerMapGerm>> pairs(int max_total, std::size_t n) {
  Rng rng(42);
  std::vector<std::pair<CornerMapGerm, CornerMapGerm>> out;
  while (out.size() < n)
    if (auto p = random_transverse_pair(rng, max_total, 3)) out.push_back(*p);
  return out;
}

void BM_FibreProduct(benchmark::State& state) {
  auto ps = pairs(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(fibre_product(f, g));
  }
}
BENCHMARK(BM_FibreProduct)->Arg(4)->Arg(6);

void BM_CornerIdentity(benchmark::State& state) {
  auto ps = pairs(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(corner_identity_check(f, g));
  }
}
BENCHMARK(BM_CornerIdentity)->Arg(4)->Arg(6);

void BM_Classify(benchmark::State& state) {
  Rng rng(7);
  std::vector<PolyMap> maps;
  for (int i = 0; i < 32; ++i) maps.push_back(random_joyce_map(rng, random_model(rng, 1, 4), random_model(rng, 1, 4)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_at_origin(maps[i++ % maps.size()]));
}
BENCHMARK(BM_Classify);

void BM_BoundarySign(benchmark::State& state) {
  ModelCorner m(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int i = 1; i <= m.depth(); ++i) benchmark::DoNotOptimize(boundary_orientation_sign(m, i));
}
BENCHMARK(BM_BoundarySign)->DenseRange(2, 6, 2);

void BM_ClassifyComplex(benchmark::State& state) {
  CornerComplex c = product_complex(square_complex(), square_complex());
  for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_ClassifyComplex);

}  // namespace
BENCHMARK_MAIN();
