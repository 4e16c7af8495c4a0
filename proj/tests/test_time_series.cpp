#include <doctest.h>

#include <cmath>
#include <limits>

#include "sarima/errors.hpp"
#include "sarima/time_series.hpp"
#include "test_helpers.hpp"

using sarima::DataError;
using sarima::TimeSeries;
using sarima::YearMonth;

TEST_CASE("month arithmetic wraps across year boundaries") {
  YearMonth ym{2016, 11};
  CHECK(ym.plus(1) == YearMonth{2016, 12});
  CHECK(ym.plus(2) == YearMonth{2017, 1});
  CHECK(ym.plus(14) == YearMonth{2018, 1});
  CHECK(ym.plus(-11) == YearMonth{2015, 12});
  CHECK(ym.plus(-23) == YearMonth{2014, 12});
  CHECK(YearMonth{2000, 1}.plus(-1) == YearMonth{1999, 12});
}

TEST_CASE("ordinal is a strictly increasing month index") {
  CHECK(YearMonth{2017, 1}.ordinal() - YearMonth{2016, 12}.ordinal() == 1);
  CHECK(YearMonth{2020, 6}.ordinal() - YearMonth{2010, 6}.ordinal() == 120);
  for (int k = -30; k <= 30; ++k) {
    YearMonth base{2015, 7};
    CHECK(base.plus(k).ordinal() == base.ordinal() + k);
  }
}

TEST_CASE("month formatting and names") {
  CHECK(YearMonth{2017, 1}.str() == "2017-01");
  CHECK(YearMonth{2017, 12}.str() == "2017-12");
  CHECK(YearMonth{987, 3}.str() == "0987-03");
  CHECK(YearMonth{2017, 1}.short_name() == "Jan");
  CHECK(YearMonth{2017, 12}.short_name() == "Dec");
}

TEST_CASE("month parsing requires a strict YYYY-MM shape") {
  CHECK(YearMonth::parse("2017-01") == YearMonth{2017, 1});
  CHECK(YearMonth::parse("1999-12") == YearMonth{1999, 12});
  CHECK_THROWS_AS(YearMonth::parse("2017-13"), DataError);
  CHECK_THROWS_AS(YearMonth::parse("2017-00"), DataError);
  CHECK_THROWS_AS(YearMonth::parse("2017-1"), DataError);
  CHECK_THROWS_AS(YearMonth::parse("17-01"), DataError);
  CHECK_THROWS_AS(YearMonth::parse("2017/01"), DataError);
  CHECK_THROWS_AS(YearMonth::parse("2017-01x"), DataError);
  CHECK_THROWS_AS(YearMonth::parse(""), DataError);
}

TEST_CASE("series construction validates its inputs") {
  CHECK_THROWS_AS(TimeSeries({2017, 1}, 12, {}), DataError);
  CHECK_THROWS_AS(TimeSeries({2017, 1}, 0, {1.0}), DataError);
  CHECK_THROWS_AS(TimeSeries({2017, 1}, 12, {1.0, std::nan("")}), DataError);
  CHECK_THROWS_AS(
      TimeSeries({2017, 1}, 12, {1.0, std::numeric_limits<double>::infinity()}),
      DataError);
}

TEST_CASE("month_at and end follow the start month") {
  TimeSeries ts({2016, 11}, 12, {1, 2, 3, 4});
  CHECK(ts.month_at(0) == YearMonth{2016, 11});
  CHECK(ts.month_at(3) == YearMonth{2017, 2});
  CHECK(ts.end() == YearMonth{2017, 2});
}

TEST_CASE("split by count reserves the requested tail") {
  TimeSeries ts({2016, 1}, 12, {1, 2, 3, 4, 5, 6});
  auto [train, test] = sarima::split_by_count(ts, 2);
  CHECK(train.values() == std::vector<double>{1, 2, 3, 4});
  CHECK(test.values() == std::vector<double>{5, 6});
  CHECK(test.start() == YearMonth{2016, 5});
  CHECK_THROWS_AS(sarima::split_by_count(ts, 0), DataError);
  CHECK_THROWS_AS(sarima::split_by_count(ts, 6), DataError);
}

TEST_CASE("split by date keeps the boundary month in train") {
  TimeSeries ts({2016, 1}, 12, {1, 2, 3, 4, 5, 6});
  auto [train, test] = sarima::split_by_date(ts, {2016, 3});
  CHECK(train.size() == 3);
  CHECK(test.size() == 3);
  CHECK(train.end() == YearMonth{2016, 3});
  CHECK(test.start() == YearMonth{2016, 4});
  CHECK_THROWS_AS(sarima::split_by_date(ts, {2016, 6}), DataError);
  CHECK_THROWS_AS(sarima::split_by_date(ts, {2015, 12}), DataError);
}

TEST_CASE("head and tail_from are consistent with split") {
  TimeSeries ts({2016, 1}, 12, {1, 2, 3, 4, 5});
  CHECK(ts.head(2).values() == std::vector<double>{1, 2});
  CHECK(ts.tail_from(3).values() == std::vector<double>{4, 5});
  CHECK(ts.tail_from(3).start() == YearMonth{2016, 4});
}
