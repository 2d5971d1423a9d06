#include <benchmark/benchmark.h>

#include <random>

#include "radialmra/hankel.hpp"
#include "radialmra/hypergroup.hpp"
#include "radialmra/mra.hpp"
#include "radialmra/special.hpp"

using namespace rmra;

namespace {

Vec regular(int n, std::mt19937_64& gen, double spread, double gap) {
  std::uniform_real_distribution<double> uni(-spread, spread);
  for (;;) {
    Vec x(n);
    for (int d = 0; d < n; ++d) x[d] = uni(gen);
    std::sort(x.data(), x.data() + n, std::greater<double>());
    bool ok = true;
    for (int d = 0; d + 1 < n; ++d)
      if (x[d] - x[d + 1] < gap) ok = false;
    if (ok) return x;
  }
}

void bm_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RootData rd = RootData::make(n);
  std::mt19937_64 gen(1);
  Vec x = regular(n, gen, 2.0, 0.3);
  CVec z = (Complex(0, 1) * regular(n, gen, 2.0, 0.3).cast<Complex>().array()).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(rd, x, z));
}

void bm_kernel_confluent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RootData rd = RootData::make(n);
  std::mt19937_64 gen(2);
  Vec x = regular(n, gen, 2.0, 0.3);
  x[n - 1] = x[n - 2] - 1e-5;  // below the confluent switch
  CVec z = (Complex(0, 1) * regular(n, gen, 2.0, 0.3).cast<Complex>().array()).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(rd, x, z));
}

void bm_density(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RootData rd = RootData::make(n);
  std::mt19937_64 gen(3);
  Vec x = regular(n, gen, 0.35, 0.15);
  Vec y = regular(n, gen, 3.0, 1.2);
  TranslationDensity td(rd, x, y);
  Vec mid = 0.5 * (td.box_lo + td.box_hi);
  for (auto _ : state) benchmark::DoNotOptimize(td.at(mid));
}

void bm_hankel_forward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RootData rd = RootData::make(n);
  BoxGrid g = BoxGrid::standard(n);
  HankelTransform H(rd, g);
  GridFunction f = GridFunction::sample(
      g, [](const Vec& x) { return Complex(std::exp(-0.5 * x.squaredNorm()), 0.0); });
  for (auto _ : state) benchmark::DoNotOptimize(H.forward(f));
}

void bm_wavelet_matrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto [phi, fam] = shannon_family(n);
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> uni(-M_PI, M_PI);
  Vec xi(n);
  for (int d = 0; d < n; ++d) xi[d] = uni(gen);
  for (auto _ : state) benchmark::DoNotOptimize(wavelet_matrix(fam, xi));
}

void bm_periodization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ScalingFunction phi = classical_to_radial(n, meyer_classical_profile(n), n == 2 ? 32 : 12);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
  Vec xi(n);
  for (int d = 0; d < n; ++d) xi[d] = uni(gen);
  for (auto _ : state)
    benchmark::DoNotOptimize(periodization_at(phi.rd, phi.freq, xi, phi.lattice_radius));
}

}  // namespace

BENCHMARK(bm_kernel)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(bm_kernel_confluent)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(bm_density)->Arg(2)->Arg(3);
BENCHMARK(bm_hankel_forward)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_wavelet_matrix)->Arg(2)->Arg(3);
BENCHMARK(bm_periodization)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
