#pragma once

#include "mpanf/timeseries.hpp"

#include <cstddef>
#include <functional>

namespace mpanf {

/// Direction predictions for target steps 2..len, one per increment.
struct PredictorOutput {
	MovementSeries predictions;
};

/// Anything that maps an exogenous (calendar-aligned) series to step predictions.
using MovementPredictor = std::function<PredictorOutput(const TimeSeries &)>;

/// Co-movement rule: the realized direction of an earlier-recorded exogenous series
/// is the prediction for the target at the same step (ties predict Down).
PredictorOutput comovement_predict(const TimeSeries &exogenous);

struct AccuracyReport {
	double accuracy = 0.0;
	std::size_t correct_count = 0;
	std::size_t incorrect_count = 0;
	std::size_t flat_step_count = 0;
	double up_fraction_predicted = 0.0;
	// Miss rates conditional on the actual direction; equal rates are one reading of
	// an "unbiased" predictor, a balanced up_fraction_predicted is the other.
	double error_rate_given_up = 0.0;
	double error_rate_given_down = 0.0;

	std::size_t evaluated() const noexcept {
		return correct_count + incorrect_count;
	}
};

AccuracyReport accuracy(const MovementSeries &predicted, const MovementSeries &actual);

} // namespace mpanf
