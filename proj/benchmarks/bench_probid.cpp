#include <benchmark/benchmark.h>

#include "probid/bracket.hpp"
#include "probid/complexity.hpp"
#include "probid/iid_identify.hpp"
#include "probid/measure_identify.hpp"
#include "probid/sampling.hpp"

namespace {

using probid::Rational;

void BM_Tau(benchmark::State& state) {
  std::uint64_t n = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(probid::tau(n));
    n += 7;
  }
}
BENCHMARK(BM_Tau);

void BM_DrawIid(benchmark::State& state) {
  const auto p = probid::make_finite_pmf(
      {{1, Rational(1, 4)}, {2, Rational(1, 4)}, {3, Rational(1, 3)}, {4, Rational(1, 6)}});
  for (auto _ : state) benchmark::DoNotOptimize(probid::draw_iid(p, 7, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DrawIid)->Arg(1000)->Arg(100000);

void BM_IdentifyStep(benchmark::State& state) {
  std::vector<probid::HypothesisSpec> specs;
  for (int k = 1; k <= 10; ++k) {
    probid::FinitePmfSpec s;
    s.probs = {{1, Rational(k, 40)}, {2, Rational(20 - k, 40)}, {3, Rational(1, 4)}, {4, Rational(1, 4)}};
    specs.push_back(s);
  }
  const probid::PmfList list(specs);
  const auto sample = probid::draw_iid(list.get(10), 3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(probid::identify_step(list, sample));
}
BENCHMARK(BM_IdentifyStep)->Arg(1000)->Arg(100000);

void BM_Khat(benchmark::State& state) {
  probid::FinitePmfSpec uniform{{{1, Rational(1, 2)}, {2, Rational(1, 2)}}};
  const probid::MeasureList models({probid::ConstantMeasureSpec{1, {1, 2}}, probid::IidMeasureSpec{uniform}});
  const probid::ComplexityEstimator est({1, 2}, {}, models);
  probid::Word x;
  for (std::int64_t k = 0; k < state.range(0); ++k) x.push_back(1 + (k * k) % 2);
  for (auto _ : state) benchmark::DoNotOptimize(est.khat(x, 16));
}
BENCHMARK(BM_Khat)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
