#pragma once

#include "mpanf/config.hpp"
#include "mpanf/forecasters.hpp"
#include "mpanf/ingestion.hpp"
#include "mpanf/metrics.hpp"
#include "mpanf/movement.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mpanf {

struct SeriesStats {
	std::string name;
	std::size_t count = 0;
	double min = 0.0;
	double median = 0.0;
	double max = 0.0;
	std::optional<double> acc_in;
	std::optional<double> eps_bar_in;
};

SeriesStats describe(std::string name, const TimeSeries &series);

struct MethodResult {
	Method method;
	ForecastSeries forecast;
	EvalReport eval;
};

struct SeriesResult {
	std::string name;
	bool ok = true;
	std::string failed_stage;
	std::string error;

	SeriesStats stats;
	std::optional<SeriesStats> exogenous_stats;
	std::size_t target_missing_rows = 0;
	std::size_t exogenous_missing_rows = 0;
	AlignmentLog alignment;

	std::vector<Date> out_dates;
	std::vector<double> out_actual;
	std::vector<MethodResult> methods;

	std::optional<MpanfModel> mpanf;
	AccuracyReport accuracy_in;
	AccuracyReport accuracy_out;
	std::optional<RetroDiagnostics> retro;
	std::vector<std::string> warnings;

	const MethodResult *find(Method method) const;
};

struct ExperimentReport {
	std::vector<Method> methods;
	std::vector<SeriesResult> series;

	bool all_ok() const;
};

/// Full protocol for one aligned pair: split, predict, fit, roll, evaluate, diagnose.
/// Stage failures are caught and recorded on the result.
SeriesResult run_series(std::string name, const AlignedPair &pair, const ExperimentConfig &config,
                        bool stats_only = false);

/// Loads every configured series, aligns each with the exogenous series, truncates, and
/// runs `run_series`. Results keep the configured series order.
ExperimentReport run_experiment(const ExperimentConfig &config, bool stats_only = false);

} // namespace mpanf
