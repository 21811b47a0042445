// mpanf command line: `run` reproduces the forecasting experiment, `stats` writes the
// summary statistics table only, `mc` runs the Monte Carlo validation over a p grid.

#include "mpanf/config.hpp"
#include "mpanf/error.hpp"
#include "mpanf/experiment.hpp"
#include "mpanf/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <map>
#include <string>

namespace {

// Config keys that can be overridden from the command line with --<key>.
constexpr const char *override_keys[] = {
    "series",         "exogenous",     "date_column",   "truncate_length", "split_fraction",
    "output_dir",     "drift_rolling", "linreg_intercept", "mc_n",         "mc_trials",
    "mc_p_grid",      "mc_magnitudes",
};

struct CommonOptions {
	std::string config_path;
	std::string out;
	std::string format = "csv";
	std::optional<std::uint64_t> seed;
	std::string methods;
	std::map<std::string, std::string> overrides;
	std::vector<std::string> sets;
};

void add_common(CLI::App *cmd, CommonOptions &opts) {
	cmd->add_option("--config", opts.config_path, "Experiment config file (key = value lines)");
	cmd->add_option("--out", opts.out, "Output directory");
	cmd->add_option("--format", opts.format, "Table format")->check(CLI::IsMember({"csv", "markdown"}));
	cmd->add_option("--seed", opts.seed, "Random seed (Monte Carlo)");
	cmd->add_option("--methods", opts.methods, "Comma separated subset of naive,drift,ima11,linreg,mpanf");
	for (const char *key : override_keys) {
		cmd->add_option(std::string("--") + key, opts.overrides[key], std::string("Override config key ") + key);
	}
	cmd->add_option("--set", opts.sets, "Generic key=value override (repeatable)");
}

mpanf::ExperimentConfig build_config(const CommonOptions &opts) {
	mpanf::ExperimentConfig config =
	    opts.config_path.empty() ? mpanf::ExperimentConfig{} : mpanf::load_config(opts.config_path);
	for (const auto &[key, value] : opts.overrides) {
		if (!value.empty()) {
			mpanf::apply_setting(config, key, value);
		}
	}
	for (const auto &kv : opts.sets) {
		const auto eq = kv.find('=');
		if (eq == std::string::npos) {
			throw mpanf::Error(mpanf::ErrorCode::InvalidConfig, "--set expects key=value, got '" + kv + "'");
		}
		mpanf::apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1));
	}
	if (!opts.methods.empty()) {
		mpanf::apply_setting(config, "methods", opts.methods);
	}
	if (!opts.out.empty()) {
		mpanf::apply_setting(config, "output_dir", opts.out);
	}
	if (opts.seed) {
		config.seed = *opts.seed;
	}
	return config;
}

int report_series(const mpanf::ExperimentReport &report) {
	for (const auto &s : report.series) {
		if (s.ok) {
			std::cout << fmt::format("{:<10} ok", s.name);
			if (s.mpanf) {
				std::cout << fmt::format("  ACC_in={:.4f} eps_bar_in={:.4f}", s.mpanf->acc_in, s.mpanf->eps_bar_in);
			}
			std::cout << '\n';
		} else {
			std::cout << fmt::format("{:<10} FAILED at {}: {}\n", s.name, s.failed_stage, s.error);
		}
		for (const auto &w : s.warnings) {
			std::cerr << fmt::format("warning: {}: {}\n", s.name, w);
		}
	}
	return report.all_ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Movement-prediction-adjusted naive forecasting toolkit"};
	app.require_subcommand(1);

	CommonOptions run_opts;
	CommonOptions stats_opts;
	CommonOptions mc_opts;
	auto *run = app.add_subcommand("run", "Run the full backtest and write all tables");
	auto *stats = app.add_subcommand("stats", "Write the summary statistics table only");
	auto *mc = app.add_subcommand("mc", "Monte Carlo validation of the in-sample improvement");
	add_common(run, run_opts);
	add_common(stats, stats_opts);
	add_common(mc, mc_opts);

	CLI11_PARSE(app, argc, argv);

	try {
		if (run->parsed() || stats->parsed()) {
			const bool stats_only = stats->parsed();
			const CommonOptions &opts = stats_only ? stats_opts : run_opts;
			const auto config = build_config(opts);
			const auto format = *mpanf::parse_format(opts.format);
			const auto report = mpanf::run_experiment(config, stats_only);
			const auto written = stats_only ? mpanf::emit_stats(report, config.output_dir, format)
			                                : mpanf::emit_report(report, config.output_dir, format);
			const int status = report_series(report);
			std::cout << fmt::format("wrote {} files to {}\n", written.size(), config.output_dir.string());
			return status;
		}

		const auto config = build_config(mc_opts);
		const auto format = *mpanf::parse_format(mc_opts.format);
		const auto magnitudes = mpanf::MagnitudeDist::parse(config.mc_magnitudes);
		const auto reports = mpanf::run_montecarlo(config.mc_n, config.mc_p_grid, config.mc_trials, config.seed,
		                                           config.output_dir, magnitudes, format);
		for (const auto &r : reports) {
			std::cout << fmt::format("p={:.2f} predicted={:.6g} empirical={:.6g} gap={} agreement={:.2f}\n", r.p,
			                         r.predicted_delta_mse_in, r.empirical_delta_mse_in,
			                         r.relative_gap ? fmt::format("{:.4f}", *r.relative_gap) : "n/a",
			                         r.condition_agreement_rate);
		}
		std::cout << fmt::format("wrote {}\n", (config.output_dir / "montecarlo.csv").string());
		return 0;
	} catch (const mpanf::Error &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
}
