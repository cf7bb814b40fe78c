#include "ubtr/adversary.hpp"
#include "ubtr/driver.hpp"
#include "ubtr/prox.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace ubtr;

void BM_ProxSeparable(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Vector q = Vector::LinSpaced(n, -2.0, 2.0);
  const Vector x = Vector::LinSpaced(n, 1.0, -1.0);
  const BoxBall region{Vector::Constant(n, -1.5) - x, Vector::Constant(n, 1.5) - x, 0.75};
  const RegularizerSpec h = RegularizerSpec::l1(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(prox_separable(h, q, 0.5, x, region));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ProxSeparable)->Arg(1)->Arg(64)->Arg(4096);

void BM_BuildInstance(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_instance(eps, 0.1));
}
BENCHMARK(BM_BuildInstance)->Arg(10)->Arg(20)->Arg(100);

void BM_VerifyRun(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  auto inst = std::make_shared<const AdversarialInstance>(build_instance(eps, 0.1));
  const Problem problem = make_problem(inst);
  TRParams params;
  params.epsilon = eps;
  for (auto _ : state) {
    auto r = run(problem, params, HessianPolicy::adversarial_power(0.1), {SubsolverMode::Analytic, 50});
    benchmark::DoNotOptimize(r.iterations);
  }
  state.counters["k_eps"] = inst->k_eps();
}
BENCHMARK(BM_VerifyRun)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_IterativeLasso(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Vector c = Vector::LinSpaced(n, -3.0, 3.0);
  Problem p = make_unconstrained([c](const Vector& x) { return 0.5 * (x - c).squaredNorm(); },
                                 [c](const Vector& x) -> Vector { return x - c; }, RegularizerSpec::l1(0.5),
                                 Vector::Zero(n));
  p.lower = Vector::Constant(n, -2.0);
  p.upper = Vector::Constant(n, 2.0);
  for (auto _ : state) {
    auto r = run(p, TRParams{}, HessianPolicy::constant(1.0));
    benchmark::DoNotOptimize(r.final_x.data());
  }
}
BENCHMARK(BM_IterativeLasso)->Arg(10)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace

// libbenchmark_main.a ships as LTO bytecode that other compilers cannot link.
BENCHMARK_MAIN();
