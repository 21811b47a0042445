#include "mpanf/metrics.hpp"

#include "mpanf/error.hpp"
#include "mpanf/movement.hpp"

#include <cmath>
#include <string>

namespace mpanf {

namespace {

void check_lengths(std::span<const double> actual, std::span<const double> predicted) {
	if (actual.size() != predicted.size()) {
		throw Error(ErrorCode::LengthMismatch, "actual has " + std::to_string(actual.size()) +
		                                           " points, predicted has " + std::to_string(predicted.size()));
	}
	if (actual.empty()) {
		throw Error(ErrorCode::SeriesTooShort, "metrics need at least one point");
	}
}

} // namespace

double mse(std::span<const double> actual, std::span<const double> predicted) {
	check_lengths(actual, predicted);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		const double e = actual[i] - predicted[i];
		sum += e * e;
	}
	return sum / static_cast<double>(actual.size());
}

double rmse(std::span<const double> actual, std::span<const double> predicted) {
	return std::sqrt(mse(actual, predicted));
}

double mae(std::span<const double> actual, std::span<const double> predicted) {
	check_lengths(actual, predicted);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		sum += std::abs(actual[i] - predicted[i]);
	}
	return sum / static_cast<double>(actual.size());
}

double mape(std::span<const double> actual, std::span<const double> predicted) {
	check_lengths(actual, predicted);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		if (actual[i] == 0.0) {
			throw Error(ErrorCode::ZeroActual, "MAPE undefined at index " + std::to_string(i));
		}
		sum += std::abs((actual[i] - predicted[i]) / actual[i]);
	}
	return 100.0 * sum / static_cast<double>(actual.size());
}

double smape(std::span<const double> actual, std::span<const double> predicted) {
	check_lengths(actual, predicted);
	double sum = 0.0;
	for (std::size_t i = 0; i < actual.size(); ++i) {
		const double denom = (std::abs(actual[i]) + std::abs(predicted[i])) / 2.0;
		if (denom == 0.0) {
			throw Error(ErrorCode::ZeroPair, "sMAPE undefined at index " + std::to_string(i));
		}
		sum += std::abs(actual[i] - predicted[i]) / denom;
	}
	return 100.0 * sum / static_cast<double>(actual.size());
}

EvalReport evaluate(std::span<const double> actual, std::span<const double> predicted) {
	return EvalReport{rmse(actual, predicted), mae(actual, predicted), mape(actual, predicted),
	                  smape(actual, predicted), actual.size()};
}

EvalReport evaluate(const TimeSeries &actual, const ForecastSeries &predicted) {
	return evaluate(actual.values(), predicted.predictions);
}

double delta_mse_in_approx(double alpha, double acc, double eps_bar) {
	return (4.0 * alpha * acc - alpha * alpha - 2.0 * alpha) * eps_bar * eps_bar;
}

double delta_mse_out_approx(double alpha_in, double eps_bar_in, double alpha_out, double eps_bar_out) {
	const double in = alpha_in * eps_bar_in;
	return in * (2.0 * (alpha_out * eps_bar_out) - in);
}

bool retrospective_condition(double alpha_in, double eps_bar_in, double alpha_out, double eps_bar_out) {
	return alpha_out * eps_bar_out >= 0.5 * alpha_in * eps_bar_in;
}

RetroDiagnostics retrospective(double alpha_in, double eps_bar_in, double alpha_out, double eps_bar_out) {
	RetroDiagnostics d;
	d.alpha_in_star = alpha_in;
	d.eps_bar_in = eps_bar_in;
	d.alpha_out_star = alpha_out;
	d.acc_out = (alpha_out + 1.0) / 2.0;
	d.eps_bar_out = eps_bar_out;
	d.lhs = alpha_out * eps_bar_out;
	d.rhs = 0.5 * alpha_in * eps_bar_in;
	d.condition_holds = d.lhs >= d.rhs;
	d.delta_mse_out_approx = delta_mse_out_approx(alpha_in, eps_bar_in, alpha_out, eps_bar_out);
	return d;
}

RetroDiagnostics retrospective(const MpanfModel &model, const SplitSeries &split,
                               const MovementSeries &out_predictions) {
	const auto out = split.out_sample.values();
	if (out_predictions.size() != out.size()) {
		throw Error(ErrorCode::LengthMismatch, "expected one prediction per out-of-sample step");
	}
	// Actual movements over the N out-of-sample steps, the first one crossing the split.
	std::vector<double> with_boundary;
	with_boundary.reserve(out.size() + 1);
	with_boundary.push_back(split.boundary_value);
	with_boundary.insert(with_boundary.end(), out.begin(), out.end());

	MovementSeries predicted = out_predictions;
	predicted.kind = MovementKind::Predicted;
	const AccuracyReport acc = accuracy(predicted, movements(with_boundary));
	const double eps_bar_out = mean_abs_increment(split.out_sample);

	RetroDiagnostics d = retrospective(model.alpha_in_star, model.eps_bar_in, 2.0 * acc.accuracy - 1.0, eps_bar_out);
	d.acc_out = acc.accuracy;

	const auto naive = run_rolling(NaiveModel{}, split.out_sample, {}, split.boundary_value);
	const auto adjusted = run_rolling(model, split.out_sample, out_predictions.directions, split.boundary_value);
	d.delta_mse_out_empirical = mse(out, naive.predictions) - mse(out, adjusted.predictions);
	return d;
}

} // namespace mpanf
