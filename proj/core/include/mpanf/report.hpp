#pragma once

#include "mpanf/experiment.hpp"
#include "mpanf/montecarlo.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mpanf {

enum class ReportFormat { Csv, Markdown };

std::optional<ReportFormat> parse_format(std::string_view text);

struct Table {
	std::vector<std::string> header;
	std::vector<std::vector<std::string>> rows;

	std::string to_csv() const;
	std::string to_markdown() const;
};

enum class MetricKind { Rmse, Mae, Mape, Smape };

// Display tables round to 4 decimals.
Table stats_table(const ExperimentReport &report);
Table metric_table(const ExperimentReport &report, MetricKind metric);
Table retro_table(const ExperimentReport &report);
// Machine-readable tables keep full round-trip precision.
Table results_table(const ExperimentReport &report);
Table forecasts_table(const SeriesResult &series);
Table ingestion_table(const ExperimentReport &report);
Table montecarlo_table(const std::vector<McReport> &reports);

std::string format_display(double value);
std::string format_full(double value);

/// Writes stats, rmse, mae, mape, smape, retro, results, ingestion and
/// forecasts_<series> tables into `dir` (plus .md twins for Markdown).
std::vector<std::filesystem::path> emit_report(const ExperimentReport &report, const std::filesystem::path &dir,
                                               ReportFormat format);
std::vector<std::filesystem::path> emit_stats(const ExperimentReport &report, const std::filesystem::path &dir,
                                              ReportFormat format);

/// Runs monte_carlo_validate for every p and writes montecarlo.csv.
std::vector<McReport> run_montecarlo(std::size_t n, const std::vector<double> &p_grid, std::size_t trials,
                                     std::uint64_t seed, const std::filesystem::path &dir,
                                     const MagnitudeDist &magnitudes = MagnitudeDist::folded_normal(),
                                     ReportFormat format = ReportFormat::Csv);

void write_text_file(const std::filesystem::path &path, const std::string &contents);

} // namespace mpanf
