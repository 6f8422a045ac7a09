#include <benchmark/benchmark.h>

#include "dageom/cayley_klein.hpp"
#include "dageom/focal.hpp"
#include "dageom/parabolic_trig.hpp"
#include "dageom/sampling.hpp"

namespace {

using dageom::Rat;
using P = dageom::Point<Rat>;

void BM_RationalPower(benchmark::State& state) {
  dageom::RatSampler rng(1);
  const dageom::Parabola<Rat> c(rng.nonzero_rat(5, 3), rng.rat(8, 4),
                                rng.rat(8, 4));
  const P p{rng.rat(), rng.rat()};
  for (auto _ : state) {
    auto r = dageom::parabolic_power(c, p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RationalPower);

void BM_SecantProduct(benchmark::State& state) {
  const dageom::Parabola<Rat> c(1, 0, 0);
  const P p{2, 1};
  Rat m(0);
  for (auto _ : state) {
    auto r = dageom::secant_power_product(c, p, m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SecantProduct);

void BM_RadicalCenter(benchmark::State& state) {
  const dageom::Parabola<Rat> c1(1, 0, 0), c2(2, 1, -1), c3(3, -1, -2);
  for (auto _ : state) {
    auto r = dageom::radical_center(c1, c2, c3);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RadicalCenter);

void BM_Brocard(benchmark::State& state) {
  const dageom::DATriangle<Rat> t(P{0, 0}, P{1, 1}, P{3, 9});
  const Rat kappa(1);
  for (auto _ : state) {
    auto r = dageom::brocard(t, kappa);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Brocard);

void BM_CkDistanceChord(benchmark::State& state) {
  for (auto _ : state) {
    auto r = dageom::ck_distance_chord(1.0, 1e-6, 0.0, 2.0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CkDistanceChord);

void BM_AngleLimitProbe(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = dageom::angle_limit_probe(3.0, 1.0, 1.0, 1e-4, 10);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_AngleLimitProbe);

}  // namespace

BENCHMARK_MAIN();
