#include "mpanf/config.hpp"
#include "mpanf/error.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace mpanf;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
	try {
		fn();
	} catch (const Error &e) {
		return e.code();
	}
	return ErrorCode::IoError;
}

} // namespace

TEST(Config, Defaults) {
	const ExperimentConfig c;
	EXPECT_EQ(c.truncate_length, 2500u);
	EXPECT_EQ(c.split_fraction, 0.5);
	EXPECT_EQ(c.methods.size(), 5u);
	EXPECT_EQ(c.date_column, "Date");
	EXPECT_FALSE(c.drift_rolling);
	EXPECT_TRUE(c.linreg_intercept);
}

TEST(Config, ParsesFullFile) {
	const auto c = parse_config(R"(
# comment line
series = AAA:data/a.csv, BBB:b.csv:Adj Close   # trailing comment
exogenous = SPX:spx.csv:Open
truncate_length = 0
split_fraction = 0.6
methods = naive, mpanf
drift_rolling = yes
linreg_intercept = off
seed = 7
mc_p_grid = 0.6, 0.8
mc_magnitudes = exponential:2
)",
	                            "/base");
	ASSERT_EQ(c.series.size(), 2u);
	EXPECT_EQ(c.series[0].name, "AAA");
	EXPECT_EQ(c.series[0].path, std::filesystem::path("/base/data/a.csv"));
	EXPECT_EQ(c.series[0].value_column, "Close");
	EXPECT_EQ(c.series[1].value_column, "Adj Close");
	EXPECT_EQ(c.exogenous.name, "SPX");
	EXPECT_EQ(c.exogenous.value_column, "Open");
	EXPECT_EQ(c.truncate_length, 0u);
	EXPECT_EQ(c.split_fraction, 0.6);
	EXPECT_EQ(c.methods, (std::vector<Method>{Method::Naive, Method::Mpanf}));
	EXPECT_TRUE(c.drift_rolling);
	EXPECT_FALSE(c.linreg_intercept);
	EXPECT_EQ(c.seed, 7u);
	EXPECT_EQ(c.mc_p_grid, (std::vector<double>{0.6, 0.8}));
	EXPECT_EQ(c.mc_magnitudes, "exponential:2");
}

TEST(Config, RejectsBadInput) {
	ExperimentConfig c;
	EXPECT_EQ(code_of([&] { apply_setting(c, "nonsense", "1"); }), ErrorCode::InvalidConfig);
	EXPECT_EQ(code_of([&] { apply_setting(c, "split_fraction", "half"); }), ErrorCode::InvalidConfig);
	EXPECT_EQ(code_of([&] { apply_setting(c, "methods", "naive,arima"); }), ErrorCode::InvalidConfig);
	EXPECT_EQ(code_of([&] { apply_setting(c, "drift_rolling", "maybe"); }), ErrorCode::InvalidConfig);
	EXPECT_EQ(code_of([&] { apply_setting(c, "series", "nopath"); }), ErrorCode::InvalidConfig);
	EXPECT_EQ(code_of([] { parse_config("just words"); }), ErrorCode::InvalidConfig);
	EXPECT_EQ(code_of([] { load_config("/nonexistent/x.cfg"); }), ErrorCode::FileNotFound);
}

TEST(Config, Validation) {
	ExperimentConfig c;
	EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidConfig);
	apply_setting(c, "series", "A:a.csv");
	apply_setting(c, "exogenous", "X:x.csv:Open");
	EXPECT_NO_THROW(validate(c));
	c.split_fraction = 1.0;
	EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidConfig);
	c.split_fraction = 0.5;
	c.methods.clear();
	EXPECT_EQ(code_of([&] { validate(c); }), ErrorCode::InvalidConfig);
}

TEST(Config, LoadResolvesRelativeToFile) {
	const auto dir = support::fresh_dir("config_load");
	std::ofstream(dir / "exp.cfg") << "series = A:a.csv\nexogenous = X:sub/x.csv:Open\n";
	const auto c = load_config(dir / "exp.cfg");
	EXPECT_EQ(c.series[0].path, dir / "a.csv");
	EXPECT_EQ(c.exogenous.path, dir / "sub/x.csv");
}

TEST(Config, SplitList) {
	EXPECT_EQ(split_list(" a, b ,,c "), (std::vector<std::string>{"a", "b", "c"}));
	EXPECT_TRUE(split_list("").empty());
}
