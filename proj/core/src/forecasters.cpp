#include "mpanf/forecasters.hpp"

#include "mpanf/error.hpp"
#include "mpanf/movement.hpp"
#include "mpanf/ols.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mpanf {

std::string_view method_id(Method method) noexcept {
	switch (method) {
	case Method::Naive:
		return "naive";
	case Method::Drift:
		return "drift";
	case Method::Ima11:
		return "ima11";
	case Method::LinReg:
		return "linreg";
	case Method::Mpanf:
		return "mpanf";
	}
	return "unknown";
}

std::string_view method_display_name(Method method) noexcept {
	switch (method) {
	case Method::Naive:
		return "Naive";
	case Method::Drift:
		return "Naive with Drift";
	case Method::Ima11:
		return "IMA(1,1)";
	case Method::LinReg:
		return "LR";
	case Method::Mpanf:
		return "MPANF";
	}
	return "Unknown";
}

std::optional<Method> parse_method(std::string_view text) {
	for (Method m : all_methods) {
		if (text == method_id(m)) {
			return m;
		}
	}
	return std::nullopt;
}

void DriftModel::observe(double actual, double) noexcept {
	if (!rolling) {
		return;
	}
	++observations;
	drift = (actual - first_value) / static_cast<double>(observations - 1);
}

MpanfModel MpanfModel::from_accuracy(double eps_bar_in, double acc_in) {
	if (!(eps_bar_in > 0.0)) {
		throw Error(ErrorCode::DegenerateSeries, "mean absolute increment must be positive");
	}
	return MpanfModel{eps_bar_in, acc_in, 2.0 * acc_in - 1.0};
}

bool needs_predictions(const Forecaster &forecaster) noexcept {
	return std::holds_alternative<LinRegModel>(forecaster) || std::holds_alternative<MpanfModel>(forecaster);
}

Method method_of(const Forecaster &forecaster) noexcept {
	switch (forecaster.index()) {
	case 0:
		return Method::Naive;
	case 1:
		return Method::Drift;
	case 2:
		return Method::Ima11;
	case 3:
		return Method::LinReg;
	default:
		return Method::Mpanf;
	}
}

NaiveModel fit_naive() {
	return {};
}

DriftModel fit_drift(const TimeSeries &in_sample, DriftOptions options) {
	if (in_sample.size() < 3) {
		throw Error(ErrorCode::SeriesTooShort, "drift needs at least 3 in-sample observations");
	}
	DriftModel model;
	model.first_value = in_sample.front();
	model.observations = in_sample.size();
	model.drift = (in_sample.back() - in_sample.front()) / static_cast<double>(in_sample.size() - 1);
	model.rolling = options.rolling;
	return model;
}

double ima11_css(std::span<const double> differences, double theta) {
	double residual = 0.0;
	double sse = 0.0;
	for (double x : differences) {
		residual = x - theta * residual;
		sse += residual * residual;
	}
	return sse;
}

namespace {

double last_residual(std::span<const double> differences, double theta) {
	double residual = 0.0;
	for (double x : differences) {
		residual = x - theta * residual;
	}
	return residual;
}

} // namespace

Ima11Model fit_ima11(const TimeSeries &in_sample) {
	if (in_sample.size() < 3) {
		throw Error(ErrorCode::SeriesTooShort, "IMA(1,1) needs at least 3 in-sample observations");
	}
	const std::vector<double> diffs = increments(in_sample);
	const auto css = [&](double theta) { return ima11_css(diffs, theta); };

	constexpr double bound = 0.99;
	constexpr double coarse_step = 0.01;
	constexpr double tolerance = 1e-6;

	// Coarse scan to bracket the global minimum, then golden-section inside the bracket.
	double best_theta = -bound;
	double best = std::numeric_limits<double>::infinity();
	const int steps = static_cast<int>(std::lround(2.0 * bound / coarse_step));
	for (int i = 0; i <= steps; ++i) {
		const double theta = -bound + coarse_step * i;
		const double value = css(theta);
		if (value < best) {
			best = value;
			best_theta = theta;
		}
	}
	if (!std::isfinite(best)) {
		throw Error(ErrorCode::NonConvergent, "CSS is not finite on the search grid");
	}

	const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
	double lo = std::max(-bound, best_theta - coarse_step);
	double hi = std::min(bound, best_theta + coarse_step);
	double x1 = hi - inv_phi * (hi - lo);
	double x2 = lo + inv_phi * (hi - lo);
	double f1 = css(x1);
	double f2 = css(x2);
	while (hi - lo > tolerance) {
		if (f1 < f2) {
			hi = x2;
			x2 = x1;
			f2 = f1;
			x1 = hi - inv_phi * (hi - lo);
			f1 = css(x1);
		} else {
			lo = x1;
			x1 = x2;
			f1 = f2;
			x2 = lo + inv_phi * (hi - lo);
			f2 = css(x2);
		}
	}
	double theta = 0.5 * (lo + hi);
	double value = css(theta);
	if (best < value) {
		theta = best_theta;
		value = best;
	}
	if (!(std::abs(theta) < 1.0) || !std::isfinite(value)) {
		throw Error(ErrorCode::NonConvergent, "theta left the invertible region");
	}
	return Ima11Model{theta, last_residual(diffs, theta), value};
}

LinRegModel fit_linreg(const TimeSeries &in_sample, const MovementSeries &in_predictions, LinRegOptions options) {
	if (in_predictions.size() + 1 != in_sample.size()) {
		throw Error(ErrorCode::LengthMismatch, "linear regression needs one prediction per in-sample step");
	}
	const std::size_t columns = options.intercept ? 3 : 2;
	const std::size_t rows = in_predictions.size();
	std::vector<double> design;
	design.reserve(rows * columns);
	std::vector<double> response;
	response.reserve(rows);
	const auto y = in_sample.values();
	for (std::size_t t = 1; t < in_sample.size(); ++t) {
		if (options.intercept) {
			design.push_back(1.0);
		}
		design.push_back(y[t - 1]);
		design.push_back(sign_of(in_predictions[t - 1]));
		response.push_back(y[t]);
	}
	const auto beta = least_squares(design, columns, response);
	LinRegModel model;
	if (options.intercept) {
		model.beta0 = beta[0];
		model.beta1 = beta[1];
		model.beta2 = beta[2];
	} else {
		model.beta1 = beta[0];
		model.beta2 = beta[1];
	}
	return model;
}

MpanfModel fit_mpanf(const TimeSeries &in_sample, const MovementSeries &in_predictions) {
	if (in_predictions.size() + 1 != in_sample.size()) {
		throw Error(ErrorCode::LengthMismatch, "MPANF needs one prediction per in-sample step (" +
		                                           std::to_string(in_sample.size() - 1) + "), got " +
		                                           std::to_string(in_predictions.size()));
	}
	const double eps_bar = mean_abs_increment(in_sample);
	MovementSeries predicted = in_predictions;
	predicted.kind = MovementKind::Predicted;
	const AccuracyReport acc = accuracy(predicted, movements(in_sample));
	return MpanfModel::from_accuracy(eps_bar, acc.accuracy);
}

double forecast_step_mpanf(const MpanfModel &model, double last_value, Direction next_prediction) {
	return model.forecast(last_value, next_prediction);
}

ForecastSeries run_rolling(Forecaster forecaster, const TimeSeries &out_sample,
                           std::span<const Direction> out_predictions, double boundary_value) {
	const bool directional = needs_predictions(forecaster);
	if (directional && out_predictions.empty()) {
		throw Error(ErrorCode::MissingPredictions,
		            std::string(method_id(method_of(forecaster))) + " needs out-of-sample movement predictions");
	}
	if (!out_predictions.empty() && out_predictions.size() != out_sample.size()) {
		throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(out_sample.size()) +
		                                           " out-of-sample predictions, got " +
		                                           std::to_string(out_predictions.size()));
	}

	ForecastSeries result;
	result.method = std::string(method_id(method_of(forecaster)));
	result.predictions.reserve(out_sample.size());
	const auto actual = out_sample.values();
	std::visit(
	    [&](auto &model) {
		    double last = boundary_value;
		    for (std::size_t k = 0; k < actual.size(); ++k) {
			    const Direction next = out_predictions.empty() ? Direction::Down : out_predictions[k];
			    const double forecast = model.forecast(last, next);
			    result.predictions.push_back(forecast);
			    model.observe(actual[k], forecast);
			    last = actual[k];
		    }
	    },
	    forecaster);
	return result;
}

} // namespace mpanf
