#include "mpanf/error.hpp"
#include "mpanf/timeseries.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace mpanf;

namespace {

ErrorCode code_of(auto &&fn) {
	try {
		fn();
	} catch (const Error &e) {
		return e.code();
	}
	ADD_FAILURE() << "expected mpanf::Error";
	return ErrorCode::IoError;
}

} // namespace

TEST(TimeSeries, RejectsUnorderedOrShortInput) {
	const Date d0 = TimeSeries::default_start();
	EXPECT_EQ(code_of([&] { TimeSeries({d0}, {1.0}); }), ErrorCode::SeriesTooShort);
	EXPECT_EQ(code_of([&] { TimeSeries({d0, d0}, {1.0, 2.0}); }), ErrorCode::InvalidSeries);
	EXPECT_EQ(code_of([&] { TimeSeries({d0, d0 + std::chrono::days{1}}, {1.0}); }), ErrorCode::LengthMismatch);
}

TEST(Increments, DirectDifferencing) {
	const auto s = TimeSeries::from_values({1, 2, 4, 3});
	EXPECT_EQ(increments(s), (std::vector<double>{1, 2, -1}));
	EXPECT_EQ(increments(TimeSeries::from_values({5, 5, 5})), (std::vector<double>{0, 0}));
	EXPECT_EQ(code_of([] { increments(std::vector<double>{1.0}); }), ErrorCode::SeriesTooShort);
}

TEST(Movements, SignsWithTiesDown) {
	const auto m = movements(TimeSeries::from_values({1, 2, 4, 3}));
	EXPECT_EQ(m.directions, (std::vector<Direction>{Direction::Up, Direction::Up, Direction::Down}));
	EXPECT_EQ(m.kind, MovementKind::Actual);
	EXPECT_EQ(m.flat_steps, 0u);

	const auto flat = movements(TimeSeries::from_values({5, 5}));
	EXPECT_EQ(flat.directions, std::vector<Direction>{Direction::Down});
	EXPECT_EQ(flat.flat_steps, 1u);
}

TEST(MeanAbsIncrement, Examples) {
	EXPECT_DOUBLE_EQ(mean_abs_increment(TimeSeries::from_values({1, 2, 4, 3})), 4.0 / 3.0);
	EXPECT_EQ(code_of([] { mean_abs_increment(TimeSeries::from_values({5, 5, 5})); }), ErrorCode::DegenerateSeries);
}

TEST(MeanAbsIncrement, MatchesDrawnMagnitudes) {
	// Build a walk from known magnitudes; the statistic must return their sample mean.
	std::mt19937_64 rng(11);
	std::exponential_distribution<double> mag(2.0);
	std::bernoulli_distribution up(0.5);
	std::vector<double> magnitudes(999);
	std::vector<double> values{50.0};
	for (double &m : magnitudes) {
		m = mag(rng);
		values.push_back(values.back() + (up(rng) ? m : -m));
	}
	long double oracle = 0.0L;
	for (double m : magnitudes) {
		oracle += m;
	}
	oracle /= magnitudes.size();
	EXPECT_NEAR(mean_abs_increment(TimeSeries::from_values(values)), static_cast<double>(oracle), 1e-9);
}

TEST(Split, FloorRule) {
	const auto s4 = split(TimeSeries::from_values({1, 2, 3, 4}), 0.5);
	EXPECT_EQ(s4.in_sample.size(), 2u);
	EXPECT_EQ(s4.out_sample.size(), 2u);
	EXPECT_EQ(s4.boundary_value, 2.0);

	const auto s5 = split(TimeSeries::from_values({1, 2, 3, 4, 5}), 0.5);
	EXPECT_EQ(s5.in_sample.size(), 2u);
	EXPECT_EQ(s5.out_sample.size(), 3u);

	std::vector<double> big(2500);
	std::iota(big.begin(), big.end(), 1.0);
	const auto s = split(TimeSeries::from_values(big), 0.5);
	EXPECT_EQ(s.in_sample.size(), 1250u);
	EXPECT_EQ(s.out_sample.size(), 1250u);
	EXPECT_LT(s.in_sample.dates().back(), s.out_sample.dates().front());
}

TEST(Split, TooSmall) {
	EXPECT_EQ(code_of([] { split(TimeSeries::from_values({1, 2, 3}), 0.5); }), ErrorCode::SplitTooSmall);
	EXPECT_EQ(code_of([] { split(TimeSeries::from_values({1, 2, 3, 4}), 0.0); }), ErrorCode::SplitTooSmall);
	EXPECT_EQ(code_of([] { split(TimeSeries::from_values({1, 2, 3, 4}), 1.0); }), ErrorCode::SplitTooSmall);
}

TEST(TimeSeriesProperties, ReconstructionDecompositionAndSplit) {
	std::mt19937_64 rng(2024);
	std::uniform_int_distribution<std::size_t> len(4, 200);
	std::uniform_real_distribution<double> frac(0.2, 0.8);
	for (int trial = 0; trial < 200; ++trial) {
		// Dyadic prices (multiples of 1/64) keep every sum exact, so reconstruction is bitwise.
		std::uniform_int_distribution<int> ticks(-640, 640);
		std::vector<double> values{100.0};
		const std::size_t n = len(rng);
		for (std::size_t i = 1; i < n; ++i) {
			values.push_back(i % 7 == 0 ? values.back() : values.back() + ticks(rng) / 64.0);
		}
		const auto series = TimeSeries::from_values(values);
		const auto inc = increments(series);
		const auto dirs = movements(series);

		double running = values[0];
		for (std::size_t k = 0; k < inc.size(); ++k) {
			running += inc[k];
			EXPECT_EQ(running, values[k + 1]) << "trial " << trial << " step " << k;
			const double rebuilt = inc[k] == 0.0 ? 0.0 : sign_of(dirs[k]) * std::abs(inc[k]);
			EXPECT_EQ(inc[k], rebuilt);
		}

		const double f = frac(rng);
		if (std::floor(values.size() * f) < 2 || values.size() - std::floor(values.size() * f) < 2) {
			continue;
		}
		const auto parts = split(series, f);
		std::vector<double> joined(parts.in_sample.values().begin(), parts.in_sample.values().end());
		joined.insert(joined.end(), parts.out_sample.values().begin(), parts.out_sample.values().end());
		EXPECT_EQ(joined, values);
		std::vector<Date> dates(parts.in_sample.dates().begin(), parts.in_sample.dates().end());
		dates.insert(dates.end(), parts.out_sample.dates().begin(), parts.out_sample.dates().end());
		EXPECT_TRUE(std::equal(dates.begin(), dates.end(), series.dates().begin(), series.dates().end()));
	}
}

TEST(TimeSeriesProperties, MeanAbsIncrementShiftAndScale) {
	std::mt19937_64 rng(5);
	std::uniform_real_distribution<double> shift(-500.0, 500.0);
	std::uniform_real_distribution<double> scale(0.01, 100.0);
	for (int trial = 0; trial < 100; ++trial) {
		const auto values = support::random_walk(rng, 50);
		const double base = mean_abs_increment(values);
		const double c = shift(rng);
		const double k = scale(rng);
		std::vector<double> shifted = values, scaled = values;
		for (auto &v : shifted) {
			v += c;
		}
		for (auto &v : scaled) {
			v *= k;
		}
		EXPECT_NEAR(mean_abs_increment(shifted), base, 1e-9 * (1.0 + std::abs(c)));
		EXPECT_NEAR(mean_abs_increment(scaled), k * base, 1e-12 * k * base * 50);
	}
}
