#include "mpanf/experiment.hpp"

#include "mpanf/error.hpp"

#include <algorithm>
#include <exception>

#include <fmt/format.h>

namespace mpanf {

SeriesStats describe(std::string name, const TimeSeries &series) {
	SeriesStats stats;
	stats.name = std::move(name);
	stats.count = series.size();
	std::vector<double> sorted(series.values().begin(), series.values().end());
	std::sort(sorted.begin(), sorted.end());
	stats.min = sorted.front();
	stats.max = sorted.back();
	const std::size_t mid = sorted.size() / 2;
	stats.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
	return stats;
}

const MethodResult *SeriesResult::find(Method method) const {
	for (const auto &m : methods) {
		if (m.method == method) {
			return &m;
		}
	}
	return nullptr;
}

bool ExperimentReport::all_ok() const {
	return std::all_of(series.begin(), series.end(), [](const SeriesResult &s) { return s.ok; });
}

namespace {

// Runs `body`, recording the first library error against `stage`. Returns false on failure.
template <typename F>
bool stage(SeriesResult &result, std::string_view name, F &&body) {
	try {
		body();
		return true;
	} catch (const std::exception &e) {
		result.ok = false;
		result.failed_stage = std::string(name);
		result.error = e.what();
		return false;
	}
}

Forecaster fit_method(Method method, const TimeSeries &in_sample, const MovementSeries &in_pred,
                      const MpanfModel &mpanf, const ExperimentConfig &config) {
	switch (method) {
	case Method::Naive:
		return fit_naive();
	case Method::Drift:
		return fit_drift(in_sample, DriftOptions{config.drift_rolling});
	case Method::Ima11:
		return fit_ima11(in_sample);
	case Method::LinReg:
		return fit_linreg(in_sample, in_pred, LinRegOptions{config.linreg_intercept});
	case Method::Mpanf:
		return mpanf;
	}
	return fit_naive();
}

} // namespace

SeriesResult run_series(std::string name, const AlignedPair &pair, const ExperimentConfig &config, bool stats_only) {
	SeriesResult result;
	result.name = std::move(name);
	result.alignment = pair.log;
	result.stats = describe(result.name, pair.target);

	std::optional<SplitSeries> parts;
	if (!stage(result, "split", [&] { parts = split(pair.target, config.split_fraction); })) {
		return result;
	}
	const std::size_t m = parts->in_sample.size();
	result.out_dates.assign(parts->out_sample.dates().begin(), parts->out_sample.dates().end());
	result.out_actual.assign(parts->out_sample.values().begin(), parts->out_sample.values().end());

	MovementSeries in_pred;
	MovementSeries out_pred;
	if (!stage(result, "predict", [&] {
		    const PredictorOutput all = comovement_predict(pair.exogenous);
		    const auto &d = all.predictions.directions;
		    in_pred = MovementSeries{{d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m - 1)},
		                             MovementKind::Predicted};
		    out_pred = MovementSeries{{d.begin() + static_cast<std::ptrdiff_t>(m - 1), d.end()},
		                              MovementKind::Predicted};
	    })) {
		return result;
	}

	if (!stage(result, "fit:mpanf", [&] {
		    result.mpanf = fit_mpanf(parts->in_sample, in_pred);
		    result.accuracy_in = accuracy(in_pred, movements(parts->in_sample));
		    result.stats.acc_in = result.mpanf->acc_in;
		    result.stats.eps_bar_in = result.mpanf->eps_bar_in;
	    })) {
		return result;
	}
	if (result.mpanf->fades_signal()) {
		result.warnings.push_back(fmt::format("ACC_in = {:.4f} < 0.5: MPANF coefficient is negative (fading the signal)",
		                                      result.mpanf->acc_in));
	}
	if (result.accuracy_in.flat_step_count > 0) {
		result.warnings.push_back(fmt::format("{} flat in-sample steps scored as down moves",
		                                      result.accuracy_in.flat_step_count));
	}
	if (stats_only) {
		return result;
	}

	for (Method method : config.methods) {
		const bool ok = stage(result, fmt::format("forecast:{}", method_id(method)), [&] {
			Forecaster model = fit_method(method, parts->in_sample, in_pred, *result.mpanf, config);
			ForecastSeries forecast =
			    run_rolling(std::move(model), parts->out_sample, out_pred.directions, parts->boundary_value);
			const EvalReport eval = evaluate(parts->out_sample, forecast);
			result.methods.push_back(MethodResult{method, std::move(forecast), eval});
		});
		if (!ok) {
			return result;
		}
	}

	stage(result, "retrospective", [&] {
		result.retro = retrospective(*result.mpanf, *parts, out_pred);
		std::vector<double> with_boundary{parts->boundary_value};
		with_boundary.insert(with_boundary.end(), result.out_actual.begin(), result.out_actual.end());
		result.accuracy_out = accuracy(out_pred, movements(with_boundary));
	});
	return result;
}

ExperimentReport run_experiment(const ExperimentConfig &config, bool stats_only) {
	validate(config);
	ExperimentReport report;
	report.methods = config.methods;

	std::optional<RawSeries> exogenous;
	std::string exogenous_error;
	try {
		exogenous = load_csv(config.exogenous.path, CsvColumns{config.date_column, config.exogenous.value_column},
		                     config.exogenous.name);
	} catch (const std::exception &e) {
		exogenous_error = e.what();
	}

	for (const SeriesSpec &spec : config.series) {
		SeriesResult failed;
		failed.name = spec.name;
		failed.stats.name = spec.name;
		if (!exogenous) {
			failed.ok = false;
			failed.failed_stage = "load:" + config.exogenous.name;
			failed.error = exogenous_error;
			report.series.push_back(std::move(failed));
			continue;
		}

		std::optional<RawSeries> target;
		std::optional<AlignedPair> pair;
		const bool ok = stage(failed, "load", [&] {
			target = load_csv(spec.path, CsvColumns{config.date_column, spec.value_column}, spec.name);
		}) && stage(failed, "align", [&] {
			pair = align(*target, *exogenous);
			if (config.truncate_length != 0) {
				pair = truncate_tail(*pair, config.truncate_length);
			}
		});
		if (!ok) {
			report.series.push_back(std::move(failed));
			continue;
		}

		SeriesResult result = run_series(spec.name, *pair, config, stats_only);
		result.target_missing_rows = target->missing_rows;
		result.exogenous_missing_rows = exogenous->missing_rows;
		result.exogenous_stats = describe(config.exogenous.name, pair->exogenous);
		report.series.push_back(std::move(result));
	}
	return report;
}

} // namespace mpanf
