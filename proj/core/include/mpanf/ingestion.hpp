#pragma once

#include "mpanf/date.hpp"
#include "mpanf/timeseries.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace mpanf {

/// A single named column read from a CSV file, sorted ascending by date.
struct RawSeries {
	std::string name;
	std::vector<Date> dates;
	std::vector<double> values;
	// Rows skipped because the value field was empty, "null" or "NaN".
	std::size_t missing_rows = 0;

	std::size_t size() const noexcept {
		return values.size();
	}
};

struct AlignmentLog {
	std::size_t exogenous_dropped = 0; // exogenous dates absent from the target calendar
	std::size_t exogenous_filled = 0;  // target dates forward-filled from an earlier exogenous value
};

struct AlignedPair {
	TimeSeries target;
	TimeSeries exogenous;
	AlignmentLog log;

	std::size_t size() const noexcept {
		return target.size();
	}
};

struct CsvColumns {
	std::string date = "Date";
	std::string value = "Close";
};

RawSeries load_csv(const std::filesystem::path &path, const CsvColumns &columns, std::string name = {});

/// Re-indexes `exogenous` onto the target calendar: extra exogenous dates are dropped,
/// missing ones take the most recent prior exogenous value.
AlignedPair align(const RawSeries &target, const RawSeries &exogenous);
AlignedPair align(const TimeSeries &target, const TimeSeries &exogenous);

/// Keeps the most recent `length` observations of both series.
AlignedPair truncate_tail(const AlignedPair &pair, std::size_t length);

} // namespace mpanf
