#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include <Eigen/Core>

#include "csdp/kernels.hpp"
#include "csdp/problem.hpp"
#include "csdp/solver.hpp"
#include "csdp/trace.hpp"

namespace {

Eigen::MatrixXd random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = d(rng);
  return m;
}

void BM_KronsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(csdp::kernels::krons_serial(a, b));
}

void BM_KronsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(csdp::kernels::krons_parallel(a, b, 1));
}

const std::string& example_trace() {
  static const std::string text = [] {
    const csdp::SdpProblem& p = csdp::running_example();
    return csdp::trace_text(p, csdp::solve(p, csdp::SolverOptions::for_problem(p)));
  }();
  return text;
}

void BM_CheckTraceSerial(benchmark::State& state) {
  const std::string& text = example_trace();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        csdp::check_trace(text, csdp::running_example(), csdp::CheckMode::kSerial));
  }
}

void BM_CheckTraceParallel(benchmark::State& state) {
  const std::string& text = example_trace();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        csdp::check_trace(text, csdp::running_example(), csdp::CheckMode::kParallel));
  }
}

}  // namespace

BENCHMARK(BM_KronsSerial)->Arg(4)->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(BM_KronsParallel)->Arg(4)->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(BM_CheckTraceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckTraceParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
