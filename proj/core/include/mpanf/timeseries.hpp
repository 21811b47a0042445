#pragma once

#include "mpanf/date.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mpanf {

/// Dated, strictly increasing sequence of observations with at least two points.
/// Immutable after construction.
class TimeSeries {
public:
	TimeSeries(std::vector<Date> dates, std::vector<double> values);

	/// Consecutive calendar days starting at `start`.
	static TimeSeries from_values(std::vector<double> values, Date start = default_start());

	static Date default_start();

	std::size_t size() const noexcept {
		return values_.size();
	}
	std::span<const Date> dates() const noexcept {
		return dates_;
	}
	std::span<const double> values() const noexcept {
		return values_;
	}
	double operator[](std::size_t i) const {
		return values_[i];
	}
	double front() const {
		return values_.front();
	}
	double back() const {
		return values_.back();
	}

	/// Half-open sub-range [first, first + count). The result must still hold >= 2 points.
	TimeSeries slice(std::size_t first, std::size_t count) const;

	bool operator==(const TimeSeries &) const = default;

private:
	std::vector<Date> dates_;
	std::vector<double> values_;
};

enum class Direction : std::int8_t { Down = -1, Up = 1 };

constexpr double sign_of(Direction d) noexcept {
	return d == Direction::Up ? 1.0 : -1.0;
}

constexpr Direction flip(Direction d) noexcept {
	return d == Direction::Up ? Direction::Down : Direction::Up;
}

/// Up for a strictly positive step, Down otherwise (flat steps count as Down).
constexpr Direction direction_of(double previous, double current) noexcept {
	return current > previous ? Direction::Up : Direction::Down;
}

enum class MovementKind { Actual, Predicted };

struct MovementSeries {
	std::vector<Direction> directions;
	MovementKind kind = MovementKind::Actual;
	// Zero-increment steps labelled Down. Only meaningful for Actual movements.
	std::size_t flat_steps = 0;

	std::size_t size() const noexcept {
		return directions.size();
	}
	Direction operator[](std::size_t i) const {
		return directions[i];
	}
	bool operator==(const MovementSeries &) const = default;
};

MovementSeries flipped(const MovementSeries &movements);

struct SplitSeries {
	TimeSeries in_sample;
	TimeSeries out_sample;
	double boundary_value;
};

/// values[k+1] - values[k]; length size() - 1.
std::vector<double> increments(const TimeSeries &series);
std::vector<double> increments(std::span<const double> values);

MovementSeries movements(const TimeSeries &series);
MovementSeries movements(std::span<const double> values);

/// Mean of |increments|. Throws DegenerateSeries if every increment is zero.
double mean_abs_increment(const TimeSeries &series);
double mean_abs_increment(std::span<const double> values);

/// First floor(size * in_fraction) observations go in-sample.
SplitSeries split(const TimeSeries &series, double in_fraction);

} // namespace mpanf
