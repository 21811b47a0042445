#include "mpanf/ingestion.hpp"

#include "mpanf/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <string>
#include <string_view>

namespace mpanf {

namespace {

std::string_view trim(std::string_view text) {
	const auto first = text.find_first_not_of(" \t\r\n\"");
	if (first == std::string_view::npos) {
		return {};
	}
	const auto last = text.find_last_not_of(" \t\r\n\"");
	return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
	std::vector<std::string_view> fields;
	std::size_t start = 0;
	bool quoted = false;
	for (std::size_t i = 0; i < line.size(); ++i) {
		if (line[i] == '"') {
			quoted = !quoted;
		} else if (line[i] == ',' && !quoted) {
			fields.push_back(trim(line.substr(start, i - start)));
			start = i + 1;
		}
	}
	fields.push_back(trim(line.substr(start)));
	return fields;
}

bool is_missing(std::string_view field) {
	return field.empty() || field == "null" || field == "NaN" || field == "nan" || field == "NA";
}

std::size_t column_index(const std::vector<std::string_view> &header, const std::string &column,
                         const std::filesystem::path &path) {
	const auto it = std::find(header.begin(), header.end(), column);
	if (it == header.end()) {
		throw Error(ErrorCode::ParseError, path.string() + " row 1: column '" + column + "' not found in header");
	}
	return static_cast<std::size_t>(it - header.begin());
}

} // namespace

RawSeries load_csv(const std::filesystem::path &path, const CsvColumns &columns, std::string name) {
	if (!std::filesystem::exists(path)) {
		throw Error(ErrorCode::FileNotFound, path.string());
	}
	std::ifstream in(path);
	if (!in) {
		throw Error(ErrorCode::IoError, "cannot open " + path.string());
	}

	std::string header_line;
	if (!std::getline(in, header_line)) {
		throw Error(ErrorCode::ParseError, path.string() + " row 1: empty file");
	}
	if (header_line.starts_with("\xEF\xBB\xBF")) {
		header_line.erase(0, 3);
	}
	const auto header = split_fields(header_line);
	const std::size_t date_col = column_index(header, columns.date, path);
	const std::size_t value_col = column_index(header, columns.value, path);
	const std::size_t needed = std::max(date_col, value_col) + 1;

	RawSeries raw;
	raw.name = name.empty() ? path.stem().string() : std::move(name);

	std::string line;
	std::size_t row = 1;
	while (std::getline(in, line)) {
		++row;
		if (trim(line).empty()) {
			continue;
		}
		const auto fields = split_fields(line);
		const auto where = [&] { return path.string() + " row " + std::to_string(row) + ": "; };
		if (fields.size() < needed) {
			throw Error(ErrorCode::ParseError, where() + "expected at least " + std::to_string(needed) + " fields");
		}
		const auto date = parse_date(fields[date_col]);
		if (!date) {
			throw Error(ErrorCode::ParseError, where() + "bad date '" + std::string(fields[date_col]) + "'");
		}
		const auto field = fields[value_col];
		if (is_missing(field)) {
			++raw.missing_rows;
			continue;
		}
		double value = 0.0;
		const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
		if (ec != std::errc{} || ptr != field.data() + field.size()) {
			throw Error(ErrorCode::ParseError, where() + "bad value '" + std::string(field) + "'");
		}
		raw.dates.push_back(*date);
		raw.values.push_back(value);
	}

	std::vector<std::size_t> order(raw.dates.size());
	std::iota(order.begin(), order.end(), std::size_t{0});
	std::stable_sort(order.begin(), order.end(),
	                 [&](std::size_t a, std::size_t b) { return raw.dates[a] < raw.dates[b]; });
	std::vector<Date> dates;
	std::vector<double> values;
	dates.reserve(order.size());
	values.reserve(order.size());
	for (std::size_t i : order) {
		if (!dates.empty() && dates.back() == raw.dates[i]) {
			throw Error(ErrorCode::DuplicateDate, path.string() + ": " + format_date(raw.dates[i]));
		}
		dates.push_back(raw.dates[i]);
		values.push_back(raw.values[i]);
	}
	raw.dates = std::move(dates);
	raw.values = std::move(values);
	return raw;
}

namespace {

AlignedPair align_impl(std::span<const Date> target_dates, std::span<const double> target_values,
                       std::span<const Date> exo_dates, std::span<const double> exo_values) {
	if (target_dates.empty()) {
		throw Error(ErrorCode::SeriesTooShort, "target series is empty");
	}
	if (exo_dates.empty() || exo_dates.front() > target_dates.front()) {
		throw Error(ErrorCode::NoPriorExogenousValue,
		            "no exogenous observation on or before " + format_date(target_dates.front()));
	}

	AlignmentLog log;
	std::vector<double> aligned;
	aligned.reserve(target_dates.size());
	std::size_t j = 0;
	std::size_t matched = 0;
	for (const Date d : target_dates) {
		while (j + 1 < exo_dates.size() && exo_dates[j + 1] <= d) {
			++j;
		}
		// exo_dates[j] is the latest exogenous date <= d.
		if (exo_dates[j] == d) {
			++matched;
		} else {
			++log.exogenous_filled;
		}
		aligned.push_back(exo_values[j]);
	}
	log.exogenous_dropped = exo_dates.size() - matched;

	std::vector<Date> dates(target_dates.begin(), target_dates.end());
	TimeSeries target(dates, {target_values.begin(), target_values.end()});
	TimeSeries exogenous(std::move(dates), std::move(aligned));
	return AlignedPair{std::move(target), std::move(exogenous), log};
}

} // namespace

AlignedPair align(const RawSeries &target, const RawSeries &exogenous) {
	return align_impl(target.dates, target.values, exogenous.dates, exogenous.values);
}

AlignedPair align(const TimeSeries &target, const TimeSeries &exogenous) {
	return align_impl(target.dates(), target.values(), exogenous.dates(), exogenous.values());
}

AlignedPair truncate_tail(const AlignedPair &pair, std::size_t length) {
	if (pair.size() < length) {
		throw Error(ErrorCode::SeriesTooShort, "cannot truncate " + std::to_string(pair.size()) +
		                                           " observations to " + std::to_string(length));
	}
	const std::size_t first = pair.size() - length;
	return AlignedPair{pair.target.slice(first, length), pair.exogenous.slice(first, length), pair.log};
}

} // namespace mpanf
