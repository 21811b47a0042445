#pragma once

#include "mpanf/timeseries.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mpanf {

enum class Method { Naive, Drift, Ima11, LinReg, Mpanf };

inline constexpr Method all_methods[] = {Method::Naive, Method::Drift, Method::Ima11, Method::LinReg,
                                         Method::Mpanf};

std::string_view method_id(Method method) noexcept;           // "naive", "drift", ...
std::string_view method_display_name(Method method) noexcept; // "Naive", "Naive with Drift", ...
std::optional<Method> parse_method(std::string_view text);

/// Last observed value carried forward.
struct NaiveModel {
	double forecast(double last, Direction) const noexcept {
		return last;
	}
	void observe(double, double) noexcept {
	}
};

struct DriftOptions {
	// Re-estimate drift from the first in-sample value through the latest actual.
	bool rolling = false;
};

struct DriftModel {
	double drift = 0.0;
	bool rolling = false;
	double first_value = 0.0;
	std::size_t observations = 0;

	double forecast(double last, Direction) const noexcept {
		return last + drift;
	}
	void observe(double actual, double forecast) noexcept;
};

/// ARIMA(0,1,1): y[t+1] = y[t] + theta * e[t], with e the one-step residual.
struct Ima11Model {
	double theta = 0.0;
	double last_residual = 0.0;
	double css = 0.0; // conditional sum of squares at theta over the fit window

	double forecast(double last, Direction) const noexcept {
		return last + theta * last_residual;
	}
	void observe(double actual, double forecast) noexcept {
		last_residual = actual - forecast;
	}
};

struct LinRegOptions {
	bool intercept = true;
};

/// y[t] ~ beta0 + beta1 * y[t-1] + beta2 * d_hat[t].
struct LinRegModel {
	double beta0 = 0.0;
	double beta1 = 0.0;
	double beta2 = 0.0;

	double forecast(double last, Direction next) const noexcept {
		return beta0 + beta1 * last + beta2 * sign_of(next);
	}
	void observe(double, double) noexcept {
	}
};

/// Naive forecast shifted by d_hat * alpha * eps_bar with alpha = 2 * ACC_in - 1.
struct MpanfModel {
	double eps_bar_in = 0.0;
	double acc_in = 0.0;
	double alpha_in_star = 0.0;

	static MpanfModel from_accuracy(double eps_bar_in, double acc_in);

	double forecast(double last, Direction next) const noexcept {
		return last + sign_of(next) * alpha_in_star * eps_bar_in;
	}
	void observe(double, double) noexcept {
	}

	// ACC_in below 0.5 gives a negative coefficient, i.e. the signal is faded.
	bool fades_signal() const noexcept {
		return alpha_in_star < 0.0;
	}
};

using Forecaster = std::variant<NaiveModel, DriftModel, Ima11Model, LinRegModel, MpanfModel>;

bool needs_predictions(const Forecaster &forecaster) noexcept;
Method method_of(const Forecaster &forecaster) noexcept;

NaiveModel fit_naive();
DriftModel fit_drift(const TimeSeries &in_sample, DriftOptions options = {});
Ima11Model fit_ima11(const TimeSeries &in_sample);
LinRegModel fit_linreg(const TimeSeries &in_sample, const MovementSeries &in_predictions,
                       LinRegOptions options = {});
MpanfModel fit_mpanf(const TimeSeries &in_sample, const MovementSeries &in_predictions);

/// CSS objective for an MA(1) on first differences, with the pre-sample residual at zero.
double ima11_css(std::span<const double> differences, double theta);

double forecast_step_mpanf(const MpanfModel &model, double last_value, Direction next_prediction);

struct ForecastSeries {
	std::string method;
	std::vector<double> predictions;

	std::size_t size() const noexcept {
		return predictions.size();
	}
};

/// One-step-ahead forecasts over `out_sample`. Forecast k conditions on actuals up to
/// out_sample[k-1] (boundary_value for k = 0); model state advances on actuals only.
/// `out_predictions` holds one direction per out-of-sample step and may be empty for
/// forecasters that ignore direction.
ForecastSeries run_rolling(Forecaster forecaster, const TimeSeries &out_sample,
                           std::span<const Direction> out_predictions, double boundary_value);

} // namespace mpanf
