#pragma once

#include "mpanf/timeseries.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mpanf {

/// Distribution of step magnitudes |e_t| for synthetic walks. All draws must be > 0.
class MagnitudeDist {
public:
	enum class Kind { FoldedNormal, Exponential, Uniform, Constant };

	static MagnitudeDist folded_normal(double mu = 0.0, double sigma = 1.0);
	static MagnitudeDist exponential(double rate = 1.0);
	static MagnitudeDist uniform(double lo, double hi);
	static MagnitudeDist constant(double value);
	/// "folded_normal[:mu,sigma]", "exponential[:rate]", "uniform:lo,hi", "constant:v".
	static MagnitudeDist parse(const std::string &text);

	Kind kind() const noexcept {
		return kind_;
	}
	double draw(std::mt19937_64 &rng) const;
	std::string describe() const;

private:
	MagnitudeDist(Kind kind, double a, double b);

	Kind kind_;
	double a_;
	double b_;
};

struct SyntheticWalk {
	TimeSeries series;
	MovementSeries predictions; // length series.size() - 1
};

/// Random walk with equiprobable directions and i.i.d. magnitudes; each prediction matches
/// the true direction with probability p independently of the direction itself.
SyntheticWalk synth_walk(std::size_t n, double p, const MagnitudeDist &magnitudes, std::uint64_t seed,
                         double start_value = 100.0);

struct McTrial {
	std::size_t index = 0;
	std::uint64_t seed = 0;
	double eps_bar = 0.0;
	double accuracy = 0.0;
	double empirical_delta_mse_in = 0.0;
	double predicted_delta_mse_in = 0.0;
	std::optional<double> relative_gap;
	// Out-of-sample leg: MPANF fit on the in-sample half, rolled over a fresh half.
	bool condition_holds = false;
	double empirical_delta_mse_out = 0.0;
};

struct McReport {
	double p = 0.0;
	std::size_t n = 0;
	std::size_t trials = 0;
	std::uint64_t seed = 0;
	std::string magnitudes;
	double empirical_delta_mse_in = 0.0; // mean over trials
	double predicted_delta_mse_in = 0.0; // mean over trials of (2p-1)^2 eps_bar^2
	std::optional<double> relative_gap;  // |empirical - predicted| / predicted, when predicted > 0
	std::optional<double> median_trial_relative_gap;
	double empirical_std_error = 0.0; // standard error of the per-trial empirical mean
	double condition_agreement_rate = 0.0;
	std::vector<McTrial> per_trial; // ordered by trial index
};

struct McConfig {
	std::size_t n = 100000;
	double p = 0.7;
	std::size_t trials = 20;
	std::uint64_t seed = 20241016;
	MagnitudeDist magnitudes = MagnitudeDist::folded_normal();
	bool parallel = true;
};

McReport monte_carlo_validate(const McConfig &config);

} // namespace mpanf
