#include <benchmark/benchmark.h>

#include <cmath>

#include "qcalc/bilinear_product.hpp"
#include "qcalc/born.hpp"
#include "qcalc/hilbert.hpp"
#include "qcalc/network.hpp"

namespace {

using namespace qcalc;

void BM_MeanRateMc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mean_rate_mc(2.0, n, 1, static_cast<unsigned>(state.range(1))));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_MeanRateMc)->Args({1 << 20, 1})->Args({1 << 20, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const BilinearProduct g = BilinearProduct::normal_form(NormalForm::Hyperbolic).sheared(Matrix{{1, 1}, {0.5, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify);

NetworkSpec mach_zehnder() {
  const Pair t{1 / std::sqrt(2.0), 0}, r{0, 1 / std::sqrt(2.0)};
  NetworkSpec spec;
  spec.elements = {Element::source("s1"), Element::source("s2"),
                   Element::splitter("in1", {{"a", t}, {"b", r}}), Element::splitter("in2", {{"a", r}, {"b", t}}),
                   Element::combiner("a"), Element::combiner("b"), Element::phase_shift("p", 0.4),
                   Element::detector("da"), Element::detector("db")};
  spec.edges = {{"s1", "in1"}, {"s2", "in2"}, {"in1", "a"}, {"in1", "b"}, {"in2", "a"},
                {"in2", "b"},  {"a", "p"},    {"p", "da"},  {"b", "db"}};
  return spec;
}

void BM_SimulateStochastic(benchmark::State& state) {
  const NetworkSpec spec = mach_zehnder();
  SimOptions o;
  o.seed = 1;
  o.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(spec, SimMode::Stochastic, o));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SimulateStochastic)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_SampleObjects(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_objects(16, static_cast<std::size_t>(state.range(0)), 3));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleObjects)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
