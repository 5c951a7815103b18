#include <benchmark/benchmark.h>

#include <vector>

#include "cplanes/calculus.hpp"
#include "cplanes/hydrogen.hpp"
#include "cplanes/verify.hpp"

using namespace cplanes;

namespace {

std::vector<RealEvent> events(std::size_t count) {
  Sampler s(1);
  std::vector<RealEvent> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(s.physical_event());
  return v;
}

void BM_ToComplex(benchmark::State& state) {
  const auto evs = events(1024);
  const PhysicalParams p = PhysicalParams::for_level(1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(to_complex(evs[i++ & 1023], p));
}
BENCHMARK(BM_ToComplex);

void BM_PsiComplex(benchmark::State& state) {
  const Eigensolution sol(QuantumNumbers(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(0)) - 1, 1));
  std::vector<std::pair<ComplexSpherical, cplx>> pts;
  for (const auto& ev : events(1024)) {
    const ComplexEvent cev = to_complex(ev, sol.params());
    pts.emplace_back(to_complex_spherical(cev), cev.tau);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [cs, tau] = pts[i++ & 1023];
    benchmark::DoNotOptimize(psi_complex(sol, cs, tau));
  }
}
BENCHMARK(BM_PsiComplex)->Arg(2)->Arg(4)->Arg(8);

void BM_PsiContinued(benchmark::State& state) {
  const Eigensolution sol(QuantumNumbers(3, 2, 1));
  std::vector<ComplexEvent> pts;
  for (const auto& ev : events(1024)) pts.push_back(to_complex(ev, sol.params()));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(psi_continued(sol, pts[i++ & 1023]));
}
BENCHMARK(BM_PsiContinued);

void BM_SchrodingerResidual(benchmark::State& state) {
  const Eigensolution sol(QuantumNumbers(3, 2, 1));
  const auto evs = events(256);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(schrodinger_residual(sol, evs[i++ & 255], sol.params()));
}
BENCHMARK(BM_SchrodingerResidual);

void BM_CauchyRiemann(benchmark::State& state) {
  const Eigensolution sol(QuantumNumbers(2, 1, 1));
  const ComplexField f = psi_field(sol);
  const auto evs = events(256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cr_residuals(f, evs[i++ & 255], sol.params()));
}
BENCHMARK(BM_CauchyRiemann);

void BM_NormCheck(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  const QuadratureSpec spec{nodes, nodes / 2, nodes};
  for (auto _ : state) benchmark::DoNotOptimize(norm_check(QuantumNumbers(3, 2, 1), spec));
}
BENCHMARK(BM_NormCheck)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
