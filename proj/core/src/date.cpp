#include "mpanf/date.hpp"

#include <charconv>

#include <fmt/format.h>

namespace mpanf {

namespace {

bool parse_int(std::string_view text, int &out) {
	if (text.empty()) {
		return false;
	}
	for (char c : text) {
		if (c < '0' || c > '9') {
			return false;
		}
	}
	auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
	return ec == std::errc{} && ptr == text.data() + text.size();
}

} // namespace

std::optional<Date> parse_date(std::string_view text) {
	if (text.size() < 10 || text[4] != '-' || text[7] != '-') {
		return std::nullopt;
	}
	if (text.size() > 10 && text[10] != ' ' && text[10] != 'T') {
		return std::nullopt;
	}
	int y = 0, m = 0, d = 0;
	if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) || !parse_int(text.substr(8, 2), d)) {
		return std::nullopt;
	}
	const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
	                                      std::chrono::day{static_cast<unsigned>(d)}};
	if (!ymd.ok()) {
		return std::nullopt;
	}
	return std::chrono::sys_days{ymd};
}

std::string format_date(Date date) {
	const std::chrono::year_month_day ymd{date};
	return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
	                   static_cast<unsigned>(ymd.day()));
}

} // namespace mpanf
