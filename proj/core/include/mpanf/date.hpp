#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace mpanf {

using Date = std::chrono::sys_days;

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD). Trailing time components
/// ("2020-01-02 00:00:00", "2020-01-02T00:00:00Z") are ignored.
std::optional<Date> parse_date(std::string_view text);

std::string format_date(Date date);

} // namespace mpanf
