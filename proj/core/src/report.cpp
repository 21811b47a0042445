#include "mpanf/report.hpp"

#include "mpanf/error.hpp"

#include <fstream>

#include <fmt/format.h>

namespace mpanf {

std::optional<ReportFormat> parse_format(std::string_view text) {
	if (text == "csv") {
		return ReportFormat::Csv;
	}
	if (text == "markdown" || text == "md") {
		return ReportFormat::Markdown;
	}
	return std::nullopt;
}

std::string format_display(double value) {
	return fmt::format("{:.4f}", value);
}

std::string format_full(double value) {
	// Shortest representation that round-trips to the same double.
	return fmt::format("{}", value);
}

namespace {

std::string csv_escape(const std::string &field) {
	if (field.find_first_of(",\"\n") == std::string::npos) {
		return field;
	}
	std::string out = "\"";
	for (char c : field) {
		if (c == '"') {
			out += '"';
		}
		out += c;
	}
	return out + '"';
}

std::string md_escape(const std::string &field) {
	std::string out;
	for (char c : field) {
		if (c == '|') {
			out += '\\';
		}
		out += c == '\n' ? ' ' : c;
	}
	return out;
}

std::string opt_display(const std::optional<double> &v) {
	return v ? format_display(*v) : "--";
}

std::string opt_full(const std::optional<double> &v) {
	return v ? format_full(*v) : "";
}

double metric_value(const EvalReport &eval, MetricKind metric) {
	switch (metric) {
	case MetricKind::Rmse:
		return eval.rmse;
	case MetricKind::Mae:
		return eval.mae;
	case MetricKind::Mape:
		return eval.mape;
	case MetricKind::Smape:
		return eval.smape;
	}
	return 0.0;
}

std::string_view metric_file(MetricKind metric) {
	switch (metric) {
	case MetricKind::Rmse:
		return "rmse";
	case MetricKind::Mae:
		return "mae";
	case MetricKind::Mape:
		return "mape";
	case MetricKind::Smape:
		return "smape";
	}
	return "metric";
}

std::string safe_file_component(const std::string &name) {
	std::string out;
	for (char c : name) {
		const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
		                c == '_' || c == '.';
		out += ok ? c : '_';
	}
	return out;
}

} // namespace

std::string Table::to_csv() const {
	std::string out;
	const auto line = [&](const std::vector<std::string> &cells) {
		for (std::size_t i = 0; i < cells.size(); ++i) {
			if (i) {
				out += ',';
			}
			out += csv_escape(cells[i]);
		}
		out += '\n';
	};
	line(header);
	for (const auto &row : rows) {
		line(row);
	}
	return out;
}

std::string Table::to_markdown() const {
	std::string out;
	const auto line = [&](const std::vector<std::string> &cells) {
		out += '|';
		for (const auto &c : cells) {
			out += ' ' + md_escape(c) + " |";
		}
		out += '\n';
	};
	line(header);
	out += '|';
	for (std::size_t i = 0; i < header.size(); ++i) {
		out += i == 0 ? " --- |" : " ---: |";
	}
	out += '\n';
	for (const auto &row : rows) {
		line(row);
	}
	return out;
}

Table stats_table(const ExperimentReport &report) {
	Table t;
	t.header = {"Time series", "Count", "Min", "Median", "Max", "ACC_in", "eps_bar_in"};
	const SeriesStats *exogenous = nullptr;
	for (const auto &s : report.series) {
		if (s.stats.count == 0) {
			t.rows.push_back({s.name, "FAILED", "", "", "", "", ""});
			continue;
		}
		t.rows.push_back({s.name, std::to_string(s.stats.count), format_display(s.stats.min),
		                  format_display(s.stats.median), format_display(s.stats.max), opt_display(s.stats.acc_in),
		                  opt_display(s.stats.eps_bar_in)});
		if (!exogenous && s.exogenous_stats) {
			exogenous = &*s.exogenous_stats;
		}
	}
	if (exogenous) {
		t.rows.push_back({exogenous->name, std::to_string(exogenous->count), format_display(exogenous->min),
		                  format_display(exogenous->median), format_display(exogenous->max), "--", "--"});
	}
	return t;
}

Table metric_table(const ExperimentReport &report, MetricKind metric) {
	Table t;
	t.header = {"Stock"};
	for (Method m : report.methods) {
		t.header.emplace_back(method_display_name(m));
	}
	for (const auto &s : report.series) {
		std::vector<std::string> row{s.name};
		for (Method m : report.methods) {
			const MethodResult *r = s.find(m);
			row.push_back(r ? format_display(metric_value(r->eval, metric)) : "FAILED");
		}
		t.rows.push_back(std::move(row));
	}
	return t;
}

Table retro_table(const ExperimentReport &report) {
	Table t;
	t.header = {"Time series", "alpha_out", "eps_bar_out", "alpha_in", "eps_bar_in", "lhs", "rhs", "Satisfied"};
	for (const auto &s : report.series) {
		if (!s.retro) {
			t.rows.push_back({s.name, "", "", "", "", "", "", "FAILED"});
			continue;
		}
		const auto &r = *s.retro;
		t.rows.push_back({s.name, format_display(r.alpha_out_star), format_display(r.eps_bar_out),
		                  format_display(r.alpha_in_star), format_display(r.eps_bar_in), format_display(r.lhs),
		                  format_display(r.rhs), r.condition_holds ? "satisfied" : "not satisfied"});
	}
	return t;
}

Table results_table(const ExperimentReport &report) {
	Table t;
	t.header = {"series", "method", "n", "rmse", "mae", "mape", "smape"};
	for (const auto &s : report.series) {
		for (const auto &m : s.methods) {
			t.rows.push_back({s.name, std::string(method_id(m.method)), std::to_string(m.eval.n),
			                  format_full(m.eval.rmse), format_full(m.eval.mae), format_full(m.eval.mape),
			                  format_full(m.eval.smape)});
		}
	}
	return t;
}

namespace {

Table retro_full_table(const ExperimentReport &report) {
	Table t;
	t.header = {"series",        "acc_in", "eps_bar_in", "alpha_in",  "acc_out",
	            "eps_bar_out",   "alpha_out", "lhs",     "rhs",       "condition_holds",
	            "delta_mse_out_approx", "delta_mse_out_empirical"};
	for (const auto &s : report.series) {
		if (!s.retro || !s.mpanf) {
			continue;
		}
		const auto &r = *s.retro;
		t.rows.push_back({s.name, format_full(s.mpanf->acc_in), format_full(r.eps_bar_in), format_full(r.alpha_in_star),
		                  format_full(r.acc_out), format_full(r.eps_bar_out), format_full(r.alpha_out_star),
		                  format_full(r.lhs), format_full(r.rhs), r.condition_holds ? "true" : "false",
		                  format_full(r.delta_mse_out_approx), format_full(r.delta_mse_out_empirical)});
	}
	return t;
}

} // namespace

Table forecasts_table(const SeriesResult &series) {
	Table t;
	t.header = {"date", "actual"};
	for (const auto &m : series.methods) {
		t.header.emplace_back(method_id(m.method));
	}
	for (std::size_t i = 0; i < series.out_actual.size(); ++i) {
		std::vector<std::string> row{format_date(series.out_dates[i]), format_full(series.out_actual[i])};
		for (const auto &m : series.methods) {
			row.push_back(format_full(m.forecast.predictions[i]));
		}
		t.rows.push_back(std::move(row));
	}
	return t;
}

Table ingestion_table(const ExperimentReport &report) {
	Table t;
	t.header = {"series",
	            "status",
	            "failed_stage",
	            "error",
	            "rows",
	            "target_missing_rows",
	            "exogenous_missing_rows",
	            "exogenous_dropped",
	            "exogenous_filled",
	            "flat_in_sample_steps",
	            "warnings"};
	for (const auto &s : report.series) {
		std::string warnings;
		for (const auto &w : s.warnings) {
			warnings += (warnings.empty() ? "" : "; ") + w;
		}
		t.rows.push_back({s.name, s.ok ? "ok" : "failed", s.failed_stage, s.error, std::to_string(s.stats.count),
		                  std::to_string(s.target_missing_rows), std::to_string(s.exogenous_missing_rows),
		                  std::to_string(s.alignment.exogenous_dropped), std::to_string(s.alignment.exogenous_filled),
		                  std::to_string(s.accuracy_in.flat_step_count), warnings});
	}
	return t;
}

Table montecarlo_table(const std::vector<McReport> &reports) {
	Table t;
	t.header = {"p",
	            "n",
	            "trials",
	            "seed",
	            "magnitudes",
	            "predicted_delta_mse",
	            "empirical_delta_mse",
	            "relative_gap",
	            "median_trial_relative_gap",
	            "empirical_std_error",
	            "condition_agreement_rate"};
	for (const auto &r : reports) {
		t.rows.push_back({format_full(r.p), std::to_string(r.n), std::to_string(r.trials), std::to_string(r.seed),
		                  r.magnitudes, format_full(r.predicted_delta_mse_in), format_full(r.empirical_delta_mse_in),
		                  opt_full(r.relative_gap), opt_full(r.median_trial_relative_gap),
		                  format_full(r.empirical_std_error), format_full(r.condition_agreement_rate)});
	}
	return t;
}

void write_text_file(const std::filesystem::path &path, const std::string &contents) {
	std::ofstream out(path, std::ios::binary | std::ios::trunc);
	if (!out) {
		throw Error(ErrorCode::IoError, "cannot write " + path.string());
	}
	out << contents;
	if (!out) {
		throw Error(ErrorCode::IoError, "write failed for " + path.string());
	}
}

namespace {

void ensure_dir(const std::filesystem::path &dir) {
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (ec) {
		throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
	}
}

void write_table(std::vector<std::filesystem::path> &written, const std::filesystem::path &dir,
                 const std::string &stem, const Table &table, bool markdown) {
	written.push_back(dir / (stem + ".csv"));
	write_text_file(written.back(), table.to_csv());
	if (markdown) {
		written.push_back(dir / (stem + ".md"));
		write_text_file(written.back(), table.to_markdown());
	}
}

} // namespace

std::vector<std::filesystem::path> emit_stats(const ExperimentReport &report, const std::filesystem::path &dir,
                                              ReportFormat format) {
	ensure_dir(dir);
	std::vector<std::filesystem::path> written;
	write_table(written, dir, "stats", stats_table(report), format == ReportFormat::Markdown);
	return written;
}

std::vector<std::filesystem::path> emit_report(const ExperimentReport &report, const std::filesystem::path &dir,
                                               ReportFormat format) {
	ensure_dir(dir);
	const bool md = format == ReportFormat::Markdown;
	std::vector<std::filesystem::path> written;
	write_table(written, dir, "stats", stats_table(report), md);
	for (MetricKind metric : {MetricKind::Rmse, MetricKind::Mae, MetricKind::Mape, MetricKind::Smape}) {
		write_table(written, dir, std::string(metric_file(metric)), metric_table(report, metric), md);
	}
	write_table(written, dir, "retro", retro_table(report), md);
	write_table(written, dir, "results", results_table(report), false);
	write_table(written, dir, "retro_full", retro_full_table(report), false);
	write_table(written, dir, "ingestion", ingestion_table(report), false);
	for (const auto &s : report.series) {
		if (!s.methods.empty()) {
			write_table(written, dir, "forecasts_" + safe_file_component(s.name), forecasts_table(s), false);
		}
	}
	return written;
}

std::vector<McReport> run_montecarlo(std::size_t n, const std::vector<double> &p_grid, std::size_t trials,
                                     std::uint64_t seed, const std::filesystem::path &dir,
                                     const MagnitudeDist &magnitudes, ReportFormat format) {
	for (double p : p_grid) {
		if (!(p > 0.0 && p < 1.0)) {
			throw Error(ErrorCode::InvalidConfig, fmt::format("p = {} is outside (0, 1)", p));
		}
	}
	std::vector<McReport> reports;
	reports.reserve(p_grid.size());
	for (double p : p_grid) {
		McConfig config;
		config.n = n;
		config.p = p;
		config.trials = trials;
		config.seed = seed;
		config.magnitudes = magnitudes;
		reports.push_back(monte_carlo_validate(config));
	}
	ensure_dir(dir);
	std::vector<std::filesystem::path> written;
	write_table(written, dir, "montecarlo", montecarlo_table(reports), format == ReportFormat::Markdown);
	return reports;
}

} // namespace mpanf
