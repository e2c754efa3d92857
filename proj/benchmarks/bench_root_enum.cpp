#include <benchmark/benchmark.h>

#include <vector>

#include "certiroot/error_bounds.hpp"
#include "certiroot/root_enum.hpp"
#include "certiroot/sturm.hpp"
#include "certiroot/testkit.hpp"

namespace {

using namespace certiroot;

std::vector<testkit::PlantedPolynomial> corpus() {
  testkit::Generator gen(2024);
  std::vector<testkit::PlantedPolynomial> out;
  for (int i = 0; i < 16; ++i) out.push_back(testkit::plant(gen.planted_spec({})));
  return out;
}

void BM_RootEnum(benchmark::State& state) {
  const auto polys = corpus();
  const auto r = static_cast<std::uint32_t>(state.range(0));
  std::vector<PrecisionParams> params;
  for (const auto& pp : polys) {
    const auto d = static_cast<std::uint32_t>(pp.poly.degree());
    params.emplace_back(r, small_value_threshold(pp.poly, pp.min_separation.value_or(Rational(2)),
                                                 ApproxContext(r, d), pp.rootless_floor));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(root_enum(polys[i].poly, params[i]));
    i = (i + 1) % polys.size();
  }
}
BENCHMARK(BM_RootEnum)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SturmChain(benchmark::State& state) {
  testkit::Generator gen(7);
  const Polynomial p = gen.polynomial(static_cast<std::size_t>(state.range(0)), 50, 8);
  for (auto _ : state) benchmark::DoNotOptimize(sturm_chain(p));
}
BENCHMARK(BM_SturmChain)->DenseRange(2, 10, 4);

void BM_SignChangeBounds(benchmark::State& state) {
  testkit::Generator gen(9);
  const Threshold gamma(Rational(1, 100));
  std::vector<Rational> v(static_cast<std::size_t>(state.range(0)));
  for (auto& x : v) x = gen.rational(Rational(-1, 20), Rational(1, 20), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(sign_change_bounds(v, gamma));
}
BENCHMARK(BM_SignChangeBounds)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
