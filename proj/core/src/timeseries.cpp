#include "mpanf/timeseries.hpp"

#include "mpanf/error.hpp"

#include <cmath>
#include <string>

namespace mpanf {

TimeSeries::TimeSeries(std::vector<Date> dates, std::vector<double> values)
    : dates_(std::move(dates)), values_(std::move(values)) {
	if (dates_.size() != values_.size()) {
		throw Error(ErrorCode::LengthMismatch, "dates and values differ in length (" + std::to_string(dates_.size()) +
		                                           " vs " + std::to_string(values_.size()) + ")");
	}
	if (values_.size() < 2) {
		throw Error(ErrorCode::SeriesTooShort, "a series needs at least 2 observations, got " +
		                                           std::to_string(values_.size()));
	}
	for (std::size_t i = 1; i < dates_.size(); ++i) {
		if (!(dates_[i - 1] < dates_[i])) {
			throw Error(ErrorCode::InvalidSeries, "dates must be strictly increasing at index " + std::to_string(i));
		}
	}
	for (std::size_t i = 0; i < values_.size(); ++i) {
		if (!std::isfinite(values_[i])) {
			throw Error(ErrorCode::InvalidSeries, "non-finite value at index " + std::to_string(i));
		}
	}
}

Date TimeSeries::default_start() {
	return std::chrono::sys_days{std::chrono::year{2000} / std::chrono::January / 1};
}

TimeSeries TimeSeries::from_values(std::vector<double> values, Date start) {
	std::vector<Date> dates;
	dates.reserve(values.size());
	for (std::size_t i = 0; i < values.size(); ++i) {
		dates.push_back(start + std::chrono::days{static_cast<long>(i)});
	}
	return TimeSeries(std::move(dates), std::move(values));
}

TimeSeries TimeSeries::slice(std::size_t first, std::size_t count) const {
	if (first + count > size()) {
		throw Error(ErrorCode::SeriesTooShort, "slice past end of series");
	}
	return TimeSeries({dates_.begin() + first, dates_.begin() + first + count},
	                  {values_.begin() + first, values_.begin() + first + count});
}

MovementSeries flipped(const MovementSeries &movements) {
	MovementSeries out = movements;
	for (auto &d : out.directions) {
		d = flip(d);
	}
	return out;
}

std::vector<double> increments(std::span<const double> values) {
	if (values.size() < 2) {
		throw Error(ErrorCode::SeriesTooShort, "increments need at least 2 observations");
	}
	std::vector<double> out(values.size() - 1);
	for (std::size_t k = 0; k + 1 < values.size(); ++k) {
		out[k] = values[k + 1] - values[k];
	}
	return out;
}

std::vector<double> increments(const TimeSeries &series) {
	return increments(series.values());
}

MovementSeries movements(std::span<const double> values) {
	if (values.size() < 2) {
		throw Error(ErrorCode::SeriesTooShort, "movements need at least 2 observations");
	}
	MovementSeries out;
	out.kind = MovementKind::Actual;
	out.directions.reserve(values.size() - 1);
	for (std::size_t k = 1; k < values.size(); ++k) {
		out.directions.push_back(direction_of(values[k - 1], values[k]));
		if (values[k] == values[k - 1]) {
			++out.flat_steps;
		}
	}
	return out;
}

MovementSeries movements(const TimeSeries &series) {
	return movements(series.values());
}

double mean_abs_increment(std::span<const double> values) {
	if (values.size() < 2) {
		throw Error(ErrorCode::SeriesTooShort, "mean absolute increment needs at least 2 observations");
	}
	double sum = 0.0;
	for (std::size_t k = 1; k < values.size(); ++k) {
		sum += std::abs(values[k] - values[k - 1]);
	}
	if (sum == 0.0) {
		throw Error(ErrorCode::DegenerateSeries, "all increments are zero");
	}
	return sum / static_cast<double>(values.size() - 1);
}

double mean_abs_increment(const TimeSeries &series) {
	return mean_abs_increment(series.values());
}

SplitSeries split(const TimeSeries &series, double in_fraction) {
	if (!(in_fraction > 0.0 && in_fraction < 1.0)) {
		throw Error(ErrorCode::SplitTooSmall, "split fraction must lie in (0, 1)");
	}
	const auto m = static_cast<std::size_t>(std::floor(static_cast<double>(series.size()) * in_fraction));
	const std::size_t n = series.size() - m;
	if (m < 2 || n < 2) {
		throw Error(ErrorCode::SplitTooSmall, "split of " + std::to_string(series.size()) + " gives " +
		                                          std::to_string(m) + "/" + std::to_string(n) +
		                                          "; both sides need at least 2 observations");
	}
	TimeSeries in = series.slice(0, m);
	const double boundary = in.back();
	return SplitSeries{std::move(in), series.slice(m, n), boundary};
}

} // namespace mpanf
