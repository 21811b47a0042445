#include "mpanf/forecasters.hpp"
#include "mpanf/metrics.hpp"
#include "mpanf/montecarlo.hpp"

#include <benchmark/benchmark.h>

using namespace mpanf;

namespace {

SyntheticWalk walk_of(std::size_t n) {
	return synth_walk(n, 0.6, MagnitudeDist::folded_normal(), 42);
}

void BM_RollingMpanf(benchmark::State &state) {
	const auto n = static_cast<std::size_t>(state.range(0));
	const auto walk = walk_of(2 * n);
	const auto parts = split(walk.series, 0.5);
	const MovementSeries in_pred{{walk.predictions.directions.begin(), walk.predictions.directions.begin() + (n - 1)},
	                             MovementKind::Predicted};
	const std::vector<Direction> out_pred(walk.predictions.directions.begin() + (n - 1),
	                                      walk.predictions.directions.end());
	const MpanfModel model = fit_mpanf(parts.in_sample, in_pred);
	for (auto _ : state) {
		benchmark::DoNotOptimize(run_rolling(model, parts.out_sample, out_pred, parts.boundary_value));
	}
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_RollingMpanf)->Arg(1250)->Arg(100000);

void BM_Evaluate(benchmark::State &state) {
	const auto walk = walk_of(static_cast<std::size_t>(state.range(0)) + 1);
	const auto v = walk.series.values();
	const std::span<const double> actual = v.subspan(1);
	const std::span<const double> naive = v.first(v.size() - 1);
	for (auto _ : state) {
		benchmark::DoNotOptimize(evaluate(actual, naive));
	}
}
BENCHMARK(BM_Evaluate)->Arg(1250)->Arg(100000);

void BM_FitIma11(benchmark::State &state) {
	const auto walk = walk_of(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(fit_ima11(walk.series));
	}
}
BENCHMARK(BM_FitIma11)->Arg(1250)->Unit(benchmark::kMillisecond);

void BM_FitLinReg(benchmark::State &state) {
	const auto walk = walk_of(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(fit_linreg(walk.series, walk.predictions));
	}
}
BENCHMARK(BM_FitLinReg)->Arg(1250);

void BM_MonteCarloTrial(benchmark::State &state) {
	McConfig cfg;
	cfg.n = static_cast<std::size_t>(state.range(0));
	cfg.trials = 1;
	cfg.parallel = false;
	for (auto _ : state) {
		benchmark::DoNotOptimize(monte_carlo_validate(cfg));
	}
}
BENCHMARK(BM_MonteCarloTrial)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
