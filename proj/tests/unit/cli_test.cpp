#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string &args) {
	const std::string cmd = std::string("\"") + MPANF_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
	const int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &path) {
	std::ifstream in(path, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

const fs::path fixture_cfg = fs::path(MPANF_FIXTURE_DIR) / "synthetic" / "synthetic.cfg";

} // namespace

TEST(Cli, RunIsByteReproducible) {
	const auto a = mpanf::support::fresh_dir("cli_a");
	const auto b = mpanf::support::fresh_dir("cli_b");
	ASSERT_EQ(run_cli("run --config " + fixture_cfg.string() + " --out " + a.string()), 0);
	ASSERT_EQ(run_cli("run --config " + fixture_cfg.string() + " --out " + b.string()), 0);
	std::size_t files = 0;
	for (const auto &entry : fs::directory_iterator(a)) {
		const auto other = b / entry.path().filename();
		ASSERT_TRUE(fs::exists(other)) << other;
		EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
		++files;
	}
	EXPECT_GE(files, 9u);
	for (const char *name : {"rmse.csv", "mae.csv", "mape.csv", "smape.csv", "stats.csv", "retro.csv"}) {
		EXPECT_TRUE(fs::exists(a / name)) << name;
	}
}

TEST(Cli, StatsAndOverrides) {
	const auto dir = mpanf::support::fresh_dir("cli_stats");
	ASSERT_EQ(run_cli("stats --config " + fixture_cfg.string() + " --out " + dir.string() + " --format markdown"), 0);
	EXPECT_TRUE(fs::exists(dir / "stats.csv"));
	EXPECT_TRUE(fs::exists(dir / "stats.md"));
	EXPECT_FALSE(fs::exists(dir / "rmse.csv"));

	const auto sub = mpanf::support::fresh_dir("cli_subset");
	ASSERT_EQ(run_cli("run --config " + fixture_cfg.string() + " --out " + sub.string() +
	                  " --methods naive,mpanf --split_fraction 0.6 --set truncate_length=1000"),
	          0);
	std::ifstream in(sub / "rmse.csv");
	std::string header;
	std::getline(in, header);
	EXPECT_EQ(header, "Stock,Naive,MPANF");
}

TEST(Cli, MonteCarlo) {
	const auto dir = mpanf::support::fresh_dir("cli_mc");
	ASSERT_EQ(run_cli("mc --out " + dir.string() + " --mc_n 2000 --mc_trials 2 --mc_p_grid 0.6,0.8 --seed 5"), 0);
	const auto text = slurp(dir / "montecarlo.csv");
	EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(Cli, ErrorExitCodes) {
	EXPECT_EQ(run_cli("run --config /nonexistent.cfg"), 2);
	EXPECT_EQ(run_cli("run --config " + fixture_cfg.string() + " --set bogus=1"), 2);
	EXPECT_NE(run_cli("frobnicate"), 0);
	const auto dir = mpanf::support::fresh_dir("cli_fail");
	EXPECT_EQ(run_cli("run --config " + fixture_cfg.string() + " --out " + dir.string() +
	                  " --series GHOST:/nonexistent/ghost.csv"),
	          1);
}
