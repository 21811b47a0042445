#include "mpanf/montecarlo.hpp"

#include "mpanf/error.hpp"
#include "mpanf/forecasters.hpp"
#include "mpanf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include <fmt/format.h>

namespace mpanf {

MagnitudeDist::MagnitudeDist(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {
	const bool ok = [&] {
		switch (kind) {
		case Kind::FoldedNormal:
			return std::isfinite(a) && std::isfinite(b) && b > 0.0;
		case Kind::Exponential:
			return std::isfinite(a) && a > 0.0;
		case Kind::Uniform:
			return std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > a;
		case Kind::Constant:
			return std::isfinite(a) && a > 0.0;
		}
		return false;
	}();
	if (!ok) {
		throw Error(ErrorCode::BadDistribution, "magnitude distribution " + describe() +
		                                            " does not yield strictly positive draws with finite mean");
	}
}

MagnitudeDist MagnitudeDist::folded_normal(double mu, double sigma) {
	return MagnitudeDist(Kind::FoldedNormal, mu, sigma);
}

MagnitudeDist MagnitudeDist::exponential(double rate) {
	return MagnitudeDist(Kind::Exponential, rate, 0.0);
}

MagnitudeDist MagnitudeDist::uniform(double lo, double hi) {
	return MagnitudeDist(Kind::Uniform, lo, hi);
}

MagnitudeDist MagnitudeDist::constant(double value) {
	return MagnitudeDist(Kind::Constant, value, 0.0);
}

MagnitudeDist MagnitudeDist::parse(const std::string &text) {
	const auto colon = text.find(':');
	const std::string name = text.substr(0, colon);
	std::vector<double> params;
	if (colon != std::string::npos) {
		std::stringstream ss(text.substr(colon + 1));
		std::string item;
		while (std::getline(ss, item, ',')) {
			try {
				std::size_t used = 0;
				params.push_back(std::stod(item, &used));
				if (used != item.size()) {
					throw std::invalid_argument(item);
				}
			} catch (const std::exception &) {
				throw Error(ErrorCode::BadDistribution, "bad parameter '" + item + "' in '" + text + "'");
			}
		}
	}
	const auto arity = [&](std::size_t lo, std::size_t hi) {
		if (params.size() < lo || params.size() > hi) {
			throw Error(ErrorCode::BadDistribution, "wrong number of parameters in '" + text + "'");
		}
	};
	if (name == "folded_normal") {
		arity(0, 2);
		return folded_normal(params.size() > 0 ? params[0] : 0.0, params.size() > 1 ? params[1] : 1.0);
	}
	if (name == "exponential") {
		arity(0, 1);
		return exponential(params.empty() ? 1.0 : params[0]);
	}
	if (name == "uniform") {
		arity(2, 2);
		return uniform(params[0], params[1]);
	}
	if (name == "constant") {
		arity(1, 1);
		return constant(params[0]);
	}
	throw Error(ErrorCode::BadDistribution, "unknown magnitude distribution '" + text + "'");
}

double MagnitudeDist::draw(std::mt19937_64 &rng) const {
	switch (kind_) {
	case Kind::FoldedNormal: {
		std::normal_distribution<double> normal(a_, b_);
		double v = 0.0;
		while (v == 0.0) {
			v = std::abs(normal(rng));
		}
		return v;
	}
	case Kind::Exponential: {
		std::exponential_distribution<double> exp(a_);
		double v = 0.0;
		while (v == 0.0) {
			v = exp(rng);
		}
		return v;
	}
	case Kind::Uniform:
		return std::uniform_real_distribution<double>(a_, b_)(rng);
	case Kind::Constant:
		return a_;
	}
	return a_;
}

std::string MagnitudeDist::describe() const {
	switch (kind_) {
	case Kind::FoldedNormal:
		return fmt::format("folded_normal:{},{}", a_, b_);
	case Kind::Exponential:
		return fmt::format("exponential:{}", a_);
	case Kind::Uniform:
		return fmt::format("uniform:{},{}", a_, b_);
	case Kind::Constant:
		return fmt::format("constant:{}", a_);
	}
	return "unknown";
}

SyntheticWalk synth_walk(std::size_t n, double p, const MagnitudeDist &magnitudes, std::uint64_t seed,
                         double start_value) {
	if (n < 2) {
		throw Error(ErrorCode::SeriesTooShort, "a synthetic walk needs at least 2 observations");
	}
	if (!(p >= 0.0 && p <= 1.0)) {
		throw Error(ErrorCode::BadDistribution, "prediction accuracy must lie in [0, 1]");
	}
	std::mt19937_64 rng(seed);
	std::bernoulli_distribution up(0.5);
	std::bernoulli_distribution hit(p);

	std::vector<double> values;
	values.reserve(n);
	values.push_back(start_value);
	MovementSeries predictions;
	predictions.kind = MovementKind::Predicted;
	predictions.directions.reserve(n - 1);
	for (std::size_t t = 1; t < n; ++t) {
		const Direction d = up(rng) ? Direction::Up : Direction::Down;
		const double magnitude = magnitudes.draw(rng);
		values.push_back(values.back() + sign_of(d) * magnitude);
		predictions.directions.push_back(hit(rng) ? d : flip(d));
	}
	return SyntheticWalk{TimeSeries::from_values(std::move(values)), std::move(predictions)};
}

namespace {

McTrial run_trial(const McConfig &config, std::size_t index) {
	McTrial trial;
	trial.index = index;
	trial.seed = config.seed + index;

	// First n points calibrate, the following n are held out for the retrospective check.
	const SyntheticWalk walk = synth_walk(2 * config.n, config.p, config.magnitudes, trial.seed);
	const auto all = walk.series.values();
	const TimeSeries in_sample = walk.series.slice(0, config.n);
	const TimeSeries out_sample = walk.series.slice(config.n, config.n);
	MovementSeries in_pred{{walk.predictions.directions.begin(), walk.predictions.directions.begin() + (config.n - 1)},
	                       MovementKind::Predicted};
	MovementSeries out_pred{{walk.predictions.directions.begin() + (config.n - 1), walk.predictions.directions.end()},
	                        MovementKind::Predicted};

	const double alpha = 2.0 * config.p - 1.0;
	trial.eps_bar = mean_abs_increment(in_sample);

	// In-sample MSE(naive) - MSE(MPANF) at the fixed coefficient 2p - 1.
	double naive_sse = 0.0;
	double mpanf_sse = 0.0;
	std::size_t correct = 0;
	for (std::size_t t = 1; t < config.n; ++t) {
		const double step = all[t] - all[t - 1];
		const Direction d_hat = in_pred[t - 1];
		const double adjusted = step - sign_of(d_hat) * alpha * trial.eps_bar;
		naive_sse += step * step;
		mpanf_sse += adjusted * adjusted;
		correct += direction_of(all[t - 1], all[t]) == d_hat ? 1 : 0;
	}
	const auto steps = static_cast<double>(config.n - 1);
	trial.accuracy = static_cast<double>(correct) / steps;
	trial.empirical_delta_mse_in = (naive_sse - mpanf_sse) / steps;
	trial.predicted_delta_mse_in = alpha * alpha * trial.eps_bar * trial.eps_bar;
	if (trial.predicted_delta_mse_in > 0.0) {
		trial.relative_gap =
		    std::abs(trial.empirical_delta_mse_in - trial.predicted_delta_mse_in) / trial.predicted_delta_mse_in;
	}

	const MpanfModel model = fit_mpanf(in_sample, in_pred);
	const SplitSeries split{in_sample, out_sample, in_sample.back()};
	const RetroDiagnostics retro = retrospective(model, split, out_pred);
	trial.condition_holds = retro.condition_holds;
	trial.empirical_delta_mse_out = retro.delta_mse_out_empirical;
	return trial;
}

double median(std::vector<double> values) {
	std::sort(values.begin(), values.end());
	const std::size_t mid = values.size() / 2;
	return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

} // namespace

McReport monte_carlo_validate(const McConfig &config) {
	if (!(config.p > 0.0 && config.p < 1.0)) {
		throw Error(ErrorCode::BadDistribution, "accuracy p must lie in (0, 1)");
	}
	const double expected_minority = static_cast<double>(config.n) * std::min(config.p, 1.0 - config.p);
	if (config.n < 2 || expected_minority < 100.0) {
		throw Error(ErrorCode::TooFewSteps, fmt::format("n = {} gives {:.1f} expected minority predictions; need >= 100",
		                                                config.n, expected_minority));
	}
	if (config.trials == 0) {
		throw Error(ErrorCode::TooFewSteps, "at least one trial is required");
	}

	std::vector<McTrial> trials(config.trials);
	if (config.parallel && config.trials > 1) {
		std::vector<std::future<McTrial>> futures;
		futures.reserve(config.trials);
		for (std::size_t i = 0; i < config.trials; ++i) {
			futures.push_back(std::async(std::launch::async, run_trial, std::cref(config), i));
		}
		for (std::size_t i = 0; i < config.trials; ++i) {
			trials[i] = futures[i].get();
		}
	} else {
		for (std::size_t i = 0; i < config.trials; ++i) {
			trials[i] = run_trial(config, i);
		}
	}

	McReport report;
	report.p = config.p;
	report.n = config.n;
	report.trials = config.trials;
	report.seed = config.seed;
	report.magnitudes = config.magnitudes.describe();

	const auto count = static_cast<double>(trials.size());
	std::vector<double> gaps;
	std::size_t agree = 0;
	for (const auto &t : trials) {
		report.empirical_delta_mse_in += t.empirical_delta_mse_in / count;
		report.predicted_delta_mse_in += t.predicted_delta_mse_in / count;
		if (t.relative_gap) {
			gaps.push_back(*t.relative_gap);
		}
		agree += (t.empirical_delta_mse_out >= 0.0) == t.condition_holds ? 1 : 0;
	}
	if (trials.size() > 1) {
		double ss = 0.0;
		for (const auto &t : trials) {
			const double d = t.empirical_delta_mse_in - report.empirical_delta_mse_in;
			ss += d * d;
		}
		report.empirical_std_error = std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
	}
	if (report.predicted_delta_mse_in > 0.0) {
		report.relative_gap = std::abs(report.empirical_delta_mse_in - report.predicted_delta_mse_in) /
		                      report.predicted_delta_mse_in;
	}
	if (!gaps.empty()) {
		report.median_trial_relative_gap = median(gaps);
	}
	report.condition_agreement_rate = static_cast<double>(agree) / count;
	report.per_trial = std::move(trials);
	return report;
}

} // namespace mpanf
