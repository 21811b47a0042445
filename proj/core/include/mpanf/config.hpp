#pragma once

#include "mpanf/forecasters.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mpanf {

struct SeriesSpec {
	std::string name;
	std::filesystem::path path;
	std::string value_column;
};

// Config files are flat "key = value" lines; '#' starts a comment and list values are
// comma separated. Series entries are "name:path[:column]". Relative paths resolve
// against the directory of the config file.
struct ExperimentConfig {
	std::vector<SeriesSpec> series;
	SeriesSpec exogenous;
	std::string date_column = "Date";
	std::size_t truncate_length = 2500; // 0 keeps the full aligned length
	double split_fraction = 0.5;
	std::vector<Method> methods{std::begin(all_methods), std::end(all_methods)};
	std::filesystem::path output_dir = "out";
	std::uint64_t seed = 20241016;
	bool drift_rolling = false;
	bool linreg_intercept = true;
	// Monte Carlo settings used by the `mc` subcommand.
	std::size_t mc_n = 100000;
	std::size_t mc_trials = 20;
	std::vector<double> mc_p_grid{0.5, 0.55, 0.6, 0.7, 0.8, 0.9};
	std::string mc_magnitudes = "folded_normal";
};

inline constexpr std::string_view default_target_column = "Close";
inline constexpr std::string_view default_exogenous_column = "Open";

/// Applies one key = value assignment. Unknown keys and bad values throw InvalidConfig.
void apply_setting(ExperimentConfig &config, std::string_view key, std::string_view value,
                   const std::filesystem::path &base_dir = {});

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path &base_dir = {});
ExperimentConfig load_config(const std::filesystem::path &path);

/// At least one series, a non-empty method list, sane split and truncation.
void validate(const ExperimentConfig &config);

std::vector<std::string> split_list(std::string_view text);

} // namespace mpanf
