#include <benchmark/benchmark.h>

#include <random>

#include "geozeta/dual.hpp"
#include "geozeta/generators.hpp"
#include "geozeta/geodesics.hpp"
#include "geozeta/l2.hpp"
#include "geozeta/linking.hpp"
#include "geozeta/spectral.hpp"
#include "geozeta/zeta.hpp"

using namespace geozeta;

namespace {

void BM_TransferOperator(benchmark::State& state) {
  const auto x = tri_torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_operator(x));
  state.SetComplexityN(x.cell_count(1));
}
BENCHMARK(BM_TransferOperator)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_ZetaPolynomial(benchmark::State& state) {
  const auto x = tri_torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const auto t = transfer_operator(x);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_polynomial(t));
  state.counters["cells"] = static_cast<double>(t.size());
}
BENCHMARK(BM_ZetaPolynomial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ClosedGeodesics(benchmark::State& state) {
  const auto x = grid_torus(3, 3);
  const auto t = transfer_operator(x);
  for (auto _ : state) benchmark::DoNotOptimize(closed_geodesics(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClosedGeodesics)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EulerProduct(benchmark::State& state) {
  const auto x = octahedron();
  for (auto _ : state) benchmark::DoNotOptimize(zeta_from_geodesics(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EulerProduct)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EtaExact(benchmark::State& state) {
  const auto x = cross_polytope(4);
  const auto d = build_dual(x);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  Chain a(2), b(2);
  for (int i = 0; i < x.cell_count(2); ++i) a.add(i, coeff(rng));
  for (int i = 0; i < d.dual().cell_count(2); ++i) b.add(i, coeff(rng));
  const Chain k1 = boundary(x, a);
  const Chain k2 = boundary(d.dual(), b);
  const Rational z = state.range(0) ? Rational(1, 5) : Rational(1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(eta_exact(d, k1, k2, z));
  state.SetLabel(state.range(0) ? "z = 1/(N+2), pseudo-inverse" : "z = 1/7, regular solve");
}
BENCHMARK(BM_EtaExact)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_FkZetaCheck(benchmark::State& state) {
  const auto c = build_cyclic_cover("tri", 3, 3, static_cast<int>(state.range(0)));
  const std::vector<Rational> s{Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
  for (auto _ : state) benchmark::DoNotOptimize(fk_zeta_asymptotic_check(c, s));
}
BENCHMARK(BM_FkZetaCheck)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TrivialHolonomy(benchmark::State& state) {
  const auto c = build_cyclic_cover("grid", 3, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(trivial_holonomy_spectrum(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TrivialHolonomy)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
