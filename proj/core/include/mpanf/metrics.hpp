#pragma once

#include "mpanf/forecasters.hpp"
#include "mpanf/timeseries.hpp"

#include <cstddef>
#include <span>

namespace mpanf {

struct EvalReport {
	double rmse = 0.0;
	double mae = 0.0;
	double mape = 0.0;  // percent
	double smape = 0.0; // percent
	std::size_t n = 0;
};

double mse(std::span<const double> actual, std::span<const double> predicted);
double rmse(std::span<const double> actual, std::span<const double> predicted);
double mae(std::span<const double> actual, std::span<const double> predicted);
double mape(std::span<const double> actual, std::span<const double> predicted);
double smape(std::span<const double> actual, std::span<const double> predicted);

EvalReport evaluate(std::span<const double> actual, std::span<const double> predicted);
EvalReport evaluate(const TimeSeries &actual, const ForecastSeries &predicted);

/// In-sample MSE gain of MPANF over naive under the LLN approximation:
/// (4 alpha ACC - alpha^2 - 2 alpha) * eps_bar^2.
double delta_mse_in_approx(double alpha, double acc, double eps_bar);

/// Out-of-sample gain: 2 a_in e_in a_out e_out - (a_in e_in)^2.
double delta_mse_out_approx(double alpha_in, double eps_bar_in, double alpha_out, double eps_bar_out);

/// a_out * e_out >= a_in * e_in / 2.
bool retrospective_condition(double alpha_in, double eps_bar_in, double alpha_out, double eps_bar_out);

struct RetroDiagnostics {
	double alpha_in_star = 0.0;
	double eps_bar_in = 0.0;
	double acc_out = 0.0;
	double alpha_out_star = 0.0;
	double eps_bar_out = 0.0;
	double lhs = 0.0;
	double rhs = 0.0;
	bool condition_holds = false;
	double delta_mse_out_approx = 0.0;
	// Realized MSE(naive) - MSE(MPANF) over the same out-of-sample window.
	double delta_mse_out_empirical = 0.0;
};

RetroDiagnostics retrospective(double alpha_in, double eps_bar_in, double alpha_out, double eps_bar_out);

/// Scores out_predictions (one per out-of-sample step, the first being the step from
/// split.boundary_value) and evaluates the out-performance condition.
RetroDiagnostics retrospective(const MpanfModel &model, const SplitSeries &split,
                               const MovementSeries &out_predictions);

} // namespace mpanf
