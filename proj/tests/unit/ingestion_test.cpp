#include "mpanf/error.hpp"
#include "mpanf/ingestion.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

using namespace mpanf;

namespace {

std::filesystem::path write_csv(const std::filesystem::path &dir, const std::string &name, const std::string &body) {
	const auto path = dir / name;
	std::ofstream(path) << body;
	return path;
}

Date day(int y, unsigned m, unsigned d) {
	return std::chrono::sys_days{std::chrono::year{y} / std::chrono::month{m} / std::chrono::day{d}};
}

RawSeries raw(std::vector<Date> dates, std::vector<double> values) {
	return RawSeries{"x", std::move(dates), std::move(values), 0};
}

ErrorCode code_of(auto &&fn) {
	try {
		fn();
	} catch (const Error &e) {
		return e.code();
	}
	ADD_FAILURE() << "expected mpanf::Error";
	return ErrorCode::IoError;
}

} // namespace

TEST(ParseDate, IsoOnly) {
	EXPECT_EQ(parse_date("2020-01-02"), day(2020, 1, 2));
	EXPECT_EQ(parse_date("2020-01-02 00:00:00"), day(2020, 1, 2));
	EXPECT_FALSE(parse_date("2020-02-30"));
	EXPECT_FALSE(parse_date("01/02/2020"));
	EXPECT_FALSE(parse_date("2020-1-2"));
	EXPECT_EQ(format_date(day(2014, 10, 8)), "2014-10-08");
}

TEST(LoadCsv, TwoRows) {
	const auto dir = support::fresh_dir("load_two");
	const auto path = write_csv(dir, "a.csv", "Date,Close\n2020-01-02,10.0\n2020-01-03,11.0\n");
	const auto series = load_csv(path, {"Date", "Close"});
	EXPECT_EQ(series.name, "a");
	ASSERT_EQ(series.size(), 2u);
	EXPECT_EQ(series.values, (std::vector<double>{10.0, 11.0}));
}

TEST(LoadCsv, SortsAndSkipsMissingValues) {
	const auto dir = support::fresh_dir("load_sort");
	const auto path = write_csv(dir, "b.csv",
	                            "\xEF\xBB\xBF"
	                            "Date,Open,Close\r\n2020-01-03,1,11\r\n2020-01-02,1,10\r\n2020-01-06,null,null\r\n"
	                            "\r\n2020-01-07,\"2\",\"12.5\"\r\n");
	const auto series = load_csv(path, {"Date", "Close"}, "B");
	EXPECT_EQ(series.name, "B");
	EXPECT_EQ(series.dates, (std::vector<Date>{day(2020, 1, 2), day(2020, 1, 3), day(2020, 1, 7)}));
	EXPECT_EQ(series.values, (std::vector<double>{10, 11, 12.5}));
	EXPECT_EQ(series.missing_rows, 1u);
}

TEST(LoadCsv, ErrorPaths) {
	const auto dir = support::fresh_dir("load_errors");
	EXPECT_EQ(code_of([&] { load_csv(dir / "nope.csv", {}); }), ErrorCode::FileNotFound);

	const auto dup = write_csv(dir, "dup.csv", "Date,Close\n2020-01-02,1\n2020-01-03,2\n2020-01-02,3\n");
	EXPECT_EQ(code_of([&] { load_csv(dup, {}); }), ErrorCode::DuplicateDate);

	const auto bad_date = write_csv(dir, "bd.csv", "Date,Close\n2020-13-02,1\n");
	EXPECT_EQ(code_of([&] { load_csv(bad_date, {}); }), ErrorCode::ParseError);

	const auto bad_value = write_csv(dir, "bv.csv", "Date,Close\n2020-01-02,1.2.3\n");
	try {
		load_csv(bad_value, {});
		FAIL();
	} catch (const Error &e) {
		EXPECT_EQ(e.code(), ErrorCode::ParseError);
		EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
	}

	const auto no_col = write_csv(dir, "nc.csv", "Date,Open\n2020-01-02,1\n");
	EXPECT_EQ(code_of([&] { load_csv(no_col, {"Date", "Close"}); }), ErrorCode::ParseError);
}

TEST(Align, ForwardFillAndDrop) {
	const Date d1 = day(2020, 1, 1), d15 = day(2020, 1, 2), d2 = day(2020, 1, 3), d3 = day(2020, 1, 4);
	const auto target = raw({d1, d2, d3}, {1, 2, 3});
	const auto exo = raw({d1, d15, d3}, {100, 101, 102});
	const auto pair = align(target, exo);
	// d2 is missing from exo: forward-filled from d1.5, which is itself dropped.
	EXPECT_EQ(std::vector<double>(pair.exogenous.values().begin(), pair.exogenous.values().end()),
	          (std::vector<double>{100, 101, 102}));

	const auto exo2 = raw({d1, d3}, {100, 102});
	const auto pair2 = align(target, exo2);
	EXPECT_EQ(std::vector<double>(pair2.exogenous.values().begin(), pair2.exogenous.values().end()),
	          (std::vector<double>{100, 100, 102}));
	EXPECT_EQ(pair2.log.exogenous_filled, 1u);
	EXPECT_EQ(pair2.log.exogenous_dropped, 0u);
	EXPECT_EQ(pair.log.exogenous_dropped, 1u);
	EXPECT_TRUE(std::equal(pair.target.dates().begin(), pair.target.dates().end(), target.dates.begin()));
}

TEST(Align, NeedsPriorExogenousValue) {
	const auto target = raw({day(2020, 1, 1), day(2020, 1, 2)}, {1, 2});
	const auto exo = raw({day(2020, 1, 2)}, {5});
	EXPECT_EQ(code_of([&] { align(target, exo); }), ErrorCode::NoPriorExogenousValue);
}

TEST(AlignProperties, IdempotentAndNeverInventsValues) {
	std::mt19937_64 rng(99);
	std::bernoulli_distribution keep(0.8);
	std::uniform_real_distribution<double> value(1.0, 1000.0);
	for (int trial = 0; trial < 100; ++trial) {
		std::vector<Date> tdates, edates;
		std::vector<double> tvals, evals;
		const Date start = day(2015, 1, 1);
		edates.push_back(start);
		evals.push_back(value(rng));
		for (int i = 0; i < 120; ++i) {
			const Date d = start + std::chrono::days{i};
			if (i == 0 || keep(rng)) {
				tdates.push_back(d);
				tvals.push_back(value(rng));
			}
			if (i > 0 && keep(rng)) {
				edates.push_back(d);
				evals.push_back(value(rng));
			}
		}
		if (tdates.size() < 2) {
			continue;
		}
		const auto pair = align(raw(tdates, tvals), raw(edates, evals));
		EXPECT_TRUE(std::equal(pair.target.dates().begin(), pair.target.dates().end(), tdates.begin(), tdates.end()));
		EXPECT_TRUE(std::equal(pair.exogenous.dates().begin(), pair.exogenous.dates().end(), tdates.begin(),
		                       tdates.end()));
		for (double v : pair.exogenous.values()) {
			EXPECT_NE(std::find(evals.begin(), evals.end(), v), evals.end());
		}
		const auto again = align(pair.target, pair.exogenous);
		EXPECT_EQ(again.target, pair.target);
		EXPECT_EQ(again.exogenous, pair.exogenous);
	}
}

TEST(TruncateTail, KeepsMostRecent) {
	std::vector<double> v(10);
	for (std::size_t i = 0; i < v.size(); ++i) {
		v[i] = static_cast<double>(i);
	}
	const auto t = TimeSeries::from_values(v);
	const AlignedPair pair{t, t, {}};
	const auto cut = truncate_tail(pair, 4);
	EXPECT_EQ(cut.target, t.slice(6, 4));
	EXPECT_EQ(cut.exogenous, t.slice(6, 4));
	EXPECT_EQ(truncate_tail(pair, 10).target, t);
	EXPECT_EQ(code_of([&] { truncate_tail(pair, 11); }), ErrorCode::SeriesTooShort);

	std::vector<double> long_values(2600, 1.0);
	for (std::size_t i = 0; i < long_values.size(); ++i) {
		long_values[i] += static_cast<double>(i);
	}
	const auto lt = TimeSeries::from_values(long_values);
	const auto cut2500 = truncate_tail(AlignedPair{lt, lt, {}}, 2500);
	EXPECT_EQ(cut2500.size(), 2500u);
	EXPECT_EQ(cut2500.target.front(), long_values[100]);
	EXPECT_EQ(cut2500.target.dates().back(), lt.dates().back());
}
