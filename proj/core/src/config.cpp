#include "mpanf/config.hpp"

#include "mpanf/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mpanf {

namespace {

std::string_view trim(std::string_view text) {
	const auto first = text.find_first_not_of(" \t\r\n");
	if (first == std::string_view::npos) {
		return {};
	}
	const auto last = text.find_last_not_of(" \t\r\n");
	return text.substr(first, last - first + 1);
}

[[noreturn]] void bad(std::string_view key, std::string_view value, std::string_view why) {
	throw Error(ErrorCode::InvalidConfig, std::string(key) + " = '" + std::string(value) + "': " + std::string(why));
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
	T out{};
	const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
	if (ec != std::errc{} || ptr != value.data() + value.size()) {
		bad(key, value, "not a number");
	}
	return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
	if (value == "true" || value == "1" || value == "yes" || value == "on") {
		return true;
	}
	if (value == "false" || value == "0" || value == "no" || value == "off") {
		return false;
	}
	bad(key, value, "expected true or false");
}

std::filesystem::path resolve(const std::filesystem::path &base_dir, std::string_view path) {
	std::filesystem::path p{std::string(path)};
	if (p.is_relative() && !base_dir.empty()) {
		return base_dir / p;
	}
	return p;
}

// "name:path[:column]"; with three or more parts the last one is the column.
SeriesSpec parse_series(std::string_view key, std::string_view item, const std::filesystem::path &base_dir,
                        std::string_view default_column) {
	const auto first = item.find(':');
	if (first == std::string_view::npos || first == 0) {
		bad(key, item, "expected name:path[:column]");
	}
	SeriesSpec spec;
	spec.name = std::string(trim(item.substr(0, first)));
	std::string_view rest = item.substr(first + 1);
	const auto last = rest.rfind(':');
	if (last != std::string_view::npos) {
		spec.value_column = std::string(trim(rest.substr(last + 1)));
		rest = rest.substr(0, last);
	} else {
		spec.value_column = std::string(default_column);
	}
	rest = trim(rest);
	if (rest.empty() || spec.value_column.empty()) {
		bad(key, item, "expected name:path[:column]");
	}
	spec.path = resolve(base_dir, rest);
	return spec;
}

} // namespace

std::vector<std::string> split_list(std::string_view text) {
	std::vector<std::string> out;
	std::size_t start = 0;
	while (start <= text.size()) {
		auto end = text.find(',', start);
		if (end == std::string_view::npos) {
			end = text.size();
		}
		const auto item = trim(text.substr(start, end - start));
		if (!item.empty()) {
			out.emplace_back(item);
		}
		start = end + 1;
	}
	return out;
}

void apply_setting(ExperimentConfig &config, std::string_view key, std::string_view value,
                   const std::filesystem::path &base_dir) {
	key = trim(key);
	value = trim(value);
	if (key == "series") {
		config.series.clear();
		for (const auto &item : split_list(value)) {
			config.series.push_back(parse_series(key, item, base_dir, default_target_column));
		}
	} else if (key == "exogenous") {
		config.exogenous = parse_series(key, value, base_dir, default_exogenous_column);
	} else if (key == "date_column") {
		config.date_column = std::string(value);
	} else if (key == "truncate_length") {
		config.truncate_length = parse_number<std::size_t>(key, value);
	} else if (key == "split_fraction") {
		config.split_fraction = parse_number<double>(key, value);
	} else if (key == "methods") {
		config.methods.clear();
		for (const auto &item : split_list(value)) {
			const auto m = parse_method(item);
			if (!m) {
				bad(key, value, "unknown method '" + item + "'");
			}
			config.methods.push_back(*m);
		}
	} else if (key == "output_dir" || key == "out") {
		config.output_dir = resolve(base_dir, value);
	} else if (key == "seed") {
		config.seed = parse_number<std::uint64_t>(key, value);
	} else if (key == "drift_rolling") {
		config.drift_rolling = parse_bool(key, value);
	} else if (key == "linreg_intercept") {
		config.linreg_intercept = parse_bool(key, value);
	} else if (key == "mc_n") {
		config.mc_n = parse_number<std::size_t>(key, value);
	} else if (key == "mc_trials") {
		config.mc_trials = parse_number<std::size_t>(key, value);
	} else if (key == "mc_p_grid") {
		config.mc_p_grid.clear();
		for (const auto &item : split_list(value)) {
			config.mc_p_grid.push_back(parse_number<double>(key, item));
		}
	} else if (key == "mc_magnitudes") {
		config.mc_magnitudes = std::string(value);
	} else {
		bad(key, value, "unknown key");
	}
}

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path &base_dir) {
	ExperimentConfig config;
	std::size_t line_no = 0;
	std::size_t start = 0;
	while (start < text.size()) {
		auto end = text.find('\n', start);
		if (end == std::string_view::npos) {
			end = text.size();
		}
		++line_no;
		std::string_view line = text.substr(start, end - start);
		start = end + 1;
		if (const auto hash = line.find('#'); hash != std::string_view::npos) {
			line = line.substr(0, hash);
		}
		line = trim(line);
		if (line.empty()) {
			continue;
		}
		const auto eq = line.find('=');
		if (eq == std::string_view::npos) {
			throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(line_no) + ": expected key = value");
		}
		apply_setting(config, line.substr(0, eq), line.substr(eq + 1), base_dir);
	}
	return config;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw Error(ErrorCode::FileNotFound, path.string());
	}
	std::stringstream buffer;
	buffer << in.rdbuf();
	return parse_config(buffer.str(), path.parent_path());
}

void validate(const ExperimentConfig &config) {
	if (config.series.empty()) {
		throw Error(ErrorCode::InvalidConfig, "at least one series is required");
	}
	if (config.methods.empty()) {
		throw Error(ErrorCode::InvalidConfig, "methods must not be empty");
	}
	if (config.exogenous.name.empty()) {
		throw Error(ErrorCode::InvalidConfig, "an exogenous series is required");
	}
	if (!(config.split_fraction > 0.0 && config.split_fraction < 1.0)) {
		throw Error(ErrorCode::InvalidConfig, "split_fraction must lie in (0, 1)");
	}
	if (config.truncate_length != 0 && config.truncate_length < 4) {
		throw Error(ErrorCode::InvalidConfig, "truncate_length must be 0 (keep all) or at least 4");
	}
}

} // namespace mpanf
