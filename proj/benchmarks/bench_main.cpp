#include <benchmark/benchmark.h>

#include "sdwt/fock.hpp"
#include "sdwt/fourier.hpp"
#include "sdwt/fresnel.hpp"
#include "sdwt/transform.hpp"

using namespace sdwt;

namespace {

Grid3D grid(std::size_t n) {
  return {Axis::from_radius(6.0, n), Axis::from_radius(6.0, n), Axis::from_radius(8.0, 2 * n)};
}

SampledField gauss(const Grid3D& g) {
  return SampledField::tabulate(g, [](cplx a, double x) { return cplx{std::exp(-0.5 * std::norm(a) - 0.5 * x * x)}; });
}

const TransformPoint kPoint{symplectic_from_hyperbolic(0.3, 0.4, 0.0), DilationParams::make(1.2, 0.1), {cplx{0.2, -0.1}}};

void BM_ForwardDirect(benchmark::State& st) {
  const auto g = gauss(grid(static_cast<std::size_t>(st.range(0))));
  const MotherWavelet psi = default_wavelet();
  for (auto _ : st) benchmark::DoNotOptimize(sdwt_forward(g, psi, kPoint));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.grid().size()));
}
BENCHMARK(BM_ForwardDirect)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ForwardFourier(benchmark::State& st) {
  const auto F = forward_ft(gauss(grid(static_cast<std::size_t>(st.range(0)))));
  const MotherWavelet psi = default_wavelet();
  for (auto _ : st) benchmark::DoNotOptimize(sdwt_forward_fourier(F, psi, kPoint));
}
BENCHMARK(BM_ForwardFourier)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ForwardFFT(benchmark::State& st) {
  const auto g = gauss(grid(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(forward_ft(g));
}
BENCHMARK(BM_ForwardFFT)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_BatchFourier(benchmark::State& st) {
  const auto g = gauss(grid(16));
  const auto s = ParameterSampling::make(2, 1.0, 2, 0.0, 2, 0.5, 2.0, true, Axis::from_radius(1.0, 4),
                                         Axis::from_radius(1.0, 4), Axis::from_radius(2.0, 8));
  const MotherWavelet psi = default_wavelet();
  for (auto _ : st) benchmark::DoNotOptimize(sdwt_batch(g, psi, s));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size()));
}
BENCHMARK(BM_BatchFourier)->Unit(benchmark::kMillisecond);

void BM_EcsVector(benchmark::State& st) {
  const FockSpace sp(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ecs_vector({0.3, -0.2}, 0.4, sp));
}
BENCHMARK(BM_EcsVector)->Arg(12)->Arg(24);

void BM_OverlapLogConformal(benchmark::State& st) {
  const FockSpace sp(24);
  const auto bra = eta_vector(EtaLabel{0.5, -0.5}, sp), ket = ecs_vector({0.3, -0.2}, 0.4, sp);
  for (auto _ : st) benchmark::DoNotOptimize(overlap(bra, ket, Summation::LogConformal));
}
BENCHMARK(BM_OverlapLogConformal);

void BM_UNormalOrdered(benchmark::State& st) {
  const FockSpace sp(static_cast<std::size_t>(st.range(0)));
  const auto sym = symplectic_from_hyperbolic(0.3, 0.0, 0.0);
  for (auto _ : st) benchmark::DoNotOptimize(build_U_normal_ordered(sym.s(), sym.r(), 1.5, sp));
}
BENCHMARK(BM_UNormalOrdered)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_UQuadrature(benchmark::State& st) {
  const FockSpace sp(6);
  FockQuadrature q;
  q.nodes = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_U_quadrature(kPoint, sp, q));
}
BENCHMARK(BM_UQuadrature)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_KernelEval(benchmark::State& st) {
  const LensFresnelKernel k{{1.0, 1.5, 0.0, 1.0}, 1.3};
  double e = -2.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(kernel_eval(k, e, 0.3));
    e = e > 2.0 ? -2.0 : e + 1e-3;
  }
}
BENCHMARK(BM_KernelEval);

}  // namespace

BENCHMARK_MAIN();
