// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "afgr/golden.hpp"
#include "afgr/upper_bound.hpp"

namespace {

using namespace afgr;

const char* kCases[] = {"segment", "triangle", "trapezoid"};

void BM_UpperBoundParallel(benchmark::State& state) {
  const Polytope P = named_polytope(kCases[state.range(0)]);
  const Int d = dimension_estimate(P);
  for (auto _ : state) benchmark::DoNotOptimize(component_upper_bound(P, d, 1000000).count);
  state.SetLabel(kCases[state.range(0)]);
}

void BM_UpperBoundSerial(benchmark::State& state) {
  const Polytope P = named_polytope(kCases[state.range(0)]);
  const Int d = dimension_estimate(P);
  for (auto _ : state) benchmark::DoNotOptimize(component_upper_bound_serial(P, d, 1000000).count);
  state.SetLabel(kCases[state.range(0)]);
}

void BM_OrderAgreementParallel(benchmark::State& state) {
  const auto el = elements_up_to_length(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(order_disagreements(el, Perm::longest(3)));
}

void BM_OrderAgreementSerial(benchmark::State& state) {
  const auto el = elements_up_to_length(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(order_disagreements_serial(el, Perm::longest(3)));
}

}  // namespace

BENCHMARK(BM_UpperBoundParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UpperBoundSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderAgreementParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderAgreementSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
