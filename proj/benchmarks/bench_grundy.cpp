#include <benchmark/benchmark.h>

#include "grundylab/fractal.hpp"
#include "grundylab/maxnim.hpp"
#include "grundylab/minnim.hpp"
#include "grundylab/serialnim.hpp"

namespace {

using grundylab::Natural;
using grundylab::RuleSequence;

RuleSequence preset(int64_t which) {
  switch (which) {
    case 0: return RuleSequence::half();
    case 1: return RuleSequence::sqrt();
    default: return RuleSequence::pow2();
  }
}

void BM_MaxFast(benchmark::State& state) {
  const RuleSequence rule = preset(state.range(0));
  const auto n = static_cast<Natural>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::fast_grundy(rule, n));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_MaxFast)->ArgsProduct({{0, 1, 2}, {1 << 12, 1 << 16, 1 << 20}});

void BM_MaxNaive(benchmark::State& state) {
  const RuleSequence rule = preset(state.range(0));
  const auto n = static_cast<Natural>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::naive_grundy(rule, n));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_MaxNaive)->ArgsProduct({{0, 1, 2}, {1 << 10, 1 << 12, 1 << 14}});

void BM_ClosedHalf(benchmark::State& state) {
  const auto n = static_cast<Natural>(state.range(0));
  for (auto _ : state) {
    Natural sum = 0;
    for (Natural i = 1; i < n; ++i) sum += grundylab::closed_half(i);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClosedHalf)->Arg(1 << 16)->Arg(1 << 20);

void BM_MinFast(benchmark::State& state) {
  const RuleSequence rule = preset(state.range(0));
  const auto n = static_cast<Natural>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::fast_min_grundy(rule, n));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_MinFast)->ArgsProduct({{0, 1}, {1 << 12, 1 << 16, 1 << 20}});

void BM_MinNaive(benchmark::State& state) {
  const RuleSequence rule = preset(state.range(0));
  const auto n = static_cast<Natural>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::naive_min_grundy(rule, n));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_MinNaive)->ArgsProduct({{0, 1}, {1 << 10, 1 << 12}});

void BM_Lambda(benchmark::State& state) {
  const auto g = grundylab::fast_grundy(preset(state.range(0)), 1 << 16).values;
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::lambda_op(g));
}
BENCHMARK(BM_Lambda)->DenseRange(0, 2);

void BM_CheckFractal(benchmark::State& state) {
  const auto g = grundylab::fast_grundy(preset(state.range(0)), 1 << 16).values;
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::check_fractal(g));
}
BENCHMARK(BM_CheckFractal)->DenseRange(0, 2);

void BM_InterspersionPrefix(benchmark::State& state) {
  const auto g = grundylab::fast_grundy(preset(state.range(0)), 1 << 14).values;
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::check_interspersion_prefix(g));
}
BENCHMARK(BM_InterspersionPrefix)->DenseRange(0, 2);

void BM_TriangleOf(benchmark::State& state) {
  const auto g = grundylab::fast_grundy(RuleSequence::half(), 1 << 16).values;
  const auto dim = static_cast<Natural>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::triangle_of(g, dim));
}
BENCHMARK(BM_TriangleOf)->Arg(16)->Arg(64);

void BM_SerialGrundy(benchmark::State& state) {
  std::vector<Natural> heaps(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < heaps.size(); ++i) heaps[i] = 1 + (i * 7919) % 1000;
  const grundylab::SerialPosition position{heaps};
  for (auto _ : state) benchmark::DoNotOptimize(grundylab::serial_grundy(position));
}
BENCHMARK(BM_SerialGrundy)->Arg(16)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
