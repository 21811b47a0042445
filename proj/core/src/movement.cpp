#include "mpanf/movement.hpp"

#include "mpanf/error.hpp"

#include <string>

namespace mpanf {

PredictorOutput comovement_predict(const TimeSeries &exogenous) {
	MovementSeries predictions = movements(exogenous);
	predictions.kind = MovementKind::Predicted;
	predictions.flat_steps = 0;
	return PredictorOutput{std::move(predictions)};
}

AccuracyReport accuracy(const MovementSeries &predicted, const MovementSeries &actual) {
	if (predicted.size() != actual.size()) {
		throw Error(ErrorCode::LengthMismatch, "predicted has " + std::to_string(predicted.size()) +
		                                           " steps, actual has " + std::to_string(actual.size()));
	}
	if (predicted.kind != MovementKind::Predicted || actual.kind != MovementKind::Actual) {
		throw Error(ErrorCode::InvalidSeries, "accuracy compares a Predicted series against an Actual one");
	}
	if (predicted.size() == 0) {
		throw Error(ErrorCode::SeriesTooShort, "no steps to score");
	}

	AccuracyReport report;
	std::size_t predicted_up = 0;
	std::size_t actual_up = 0;
	std::size_t missed_up = 0;
	std::size_t missed_down = 0;
	for (std::size_t i = 0; i < predicted.size(); ++i) {
		const bool hit = predicted[i] == actual[i];
		if (hit) {
			++report.correct_count;
		} else {
			++report.incorrect_count;
		}
		if (predicted[i] == Direction::Up) {
			++predicted_up;
		}
		if (actual[i] == Direction::Up) {
			++actual_up;
			missed_up += hit ? 0 : 1;
		} else {
			missed_down += hit ? 0 : 1;
		}
	}
	const auto total = static_cast<double>(predicted.size());
	const std::size_t actual_down = predicted.size() - actual_up;
	report.accuracy = static_cast<double>(report.correct_count) / total;
	report.flat_step_count = actual.flat_steps;
	report.up_fraction_predicted = static_cast<double>(predicted_up) / total;
	report.error_rate_given_up = actual_up ? static_cast<double>(missed_up) / static_cast<double>(actual_up) : 0.0;
	report.error_rate_given_down =
	    actual_down ? static_cast<double>(missed_down) / static_cast<double>(actual_down) : 0.0;
	return report;
}

} // namespace mpanf
