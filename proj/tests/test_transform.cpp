#include <doctest.h>

#include <cmath>
#include <random>

#include "sarima/errors.hpp"
#include "sarima/transform.hpp"
#include "test_helpers.hpp"

using sarima::DataError;
using sarima::TimeSeries;
using testutil::make_series;

TEST_CASE("box-cox matches closed forms") {
  auto y = make_series({1.0, 2.0, 4.0});
  auto log_y = sarima::box_cox(y, 0.0);
  CHECK(log_y[0] == doctest::Approx(0.0));
  CHECK(log_y[1] == doctest::Approx(std::log(2.0)));

  auto lin = sarima::box_cox(y, 1.0);
  CHECK(lin[0] == doctest::Approx(0.0));
  CHECK(lin[2] == doctest::Approx(3.0));

  auto half = sarima::box_cox(y, 0.5);
  CHECK(half[1] == doctest::Approx((std::sqrt(2.0) - 1.0) / 0.5));
}

TEST_CASE("box-cox rejects non-positive values and names the row") {
  auto y = make_series({1.0, 0.0, 2.0});
  CHECK_THROWS_WITH_AS(sarima::box_cox(y, 0.5), doctest::Contains("index 1"),
                       DataError);
  auto neg = make_series({1.0, 2.0, -3.0});
  CHECK_THROWS_AS(sarima::box_cox(neg, 0.0), DataError);
}

TEST_CASE("box-cox inverse is a true inverse across the lambda range") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lam_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> y_dist(0.05, 50.0);
  for (int rep = 0; rep < 1000; ++rep) {
    double lambda = (rep % 25 == 0) ? 0.0 : lam_dist(rng);
    std::vector<double> vals(8);
    for (auto& v : vals) v = y_dist(rng);
    auto y = make_series(vals);
    auto z = sarima::box_cox(y, lambda);
    auto back = sarima::inv_box_cox(z, lambda);
    for (std::size_t i = 0; i < y.size(); ++i)
      CHECK(std::abs(back[i] - y[i]) <= 1e-10 * std::max(1.0, std::abs(y[i])));
  }
}

TEST_CASE("inverse box-cox rejects arguments outside the image") {
  // For lambda = 0.5 the transform maps onto (-2, inf); -3 has no preimage.
  CHECK_THROWS_AS(sarima::inv_box_cox_value(-3.0, 0.5), DataError);
  CHECK(sarima::inv_box_cox_value(0.0, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("lambda estimate for an exact linear ramp") {
  std::vector<double> vals(50);
  for (int i = 0; i < 50; ++i) vals[i] = i + 1.0;
  double lambda = sarima::estimate_lambda(make_series(vals));
  CHECK(lambda == doctest::Approx(0.72).epsilon(1e-9));
}

TEST_CASE("lambda estimate recovers a log scale for lognormal data") {
  auto noise = testutil::gaussian_draws(11, 400);
  std::vector<double> vals(noise.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::exp(noise[i]);
  double lambda = sarima::estimate_lambda(make_series(vals));
  CHECK(lambda >= -0.2);
  CHECK(lambda <= 0.2);
}

TEST_CASE("lambda grid bounds and degenerate input") {
  // A constant series carries no information about lambda at all.
  CHECK_THROWS_AS(sarima::estimate_lambda(make_series({2.0, 2.0, 2.0, 2.0})),
                  sarima::NumericError);

  std::vector<double> vals(30);
  for (int i = 0; i < 30; ++i) vals[i] = std::exp(0.1 * i);
  double lam = sarima::estimate_lambda(make_series(vals), -2.0, 2.0, 0.01);
  CHECK(lam >= -2.0);
  CHECK(lam <= 2.0);
}

TEST_CASE("differencing produces the textbook example") {
  auto y = make_series({1, 2, 4, 7, 11}, {2016, 1});
  auto [w, rec] = sarima::difference(y, 1, 1);
  CHECK(w.values() == std::vector<double>{1, 2, 3, 4});
  CHECK(w.start() == sarima::YearMonth{2016, 2});
  REQUIRE(rec.diffs.size() == 1);
  CHECK(rec.diffs[0].lag == 1);
  CHECK(rec.diffs[0].initial_values == std::vector<double>{1});
}

TEST_CASE("seasonal differencing keeps one season of initials") {
  auto y = make_series({10, 20, 30, 40, 11, 22, 33, 44}, {2016, 1}, 4);
  auto [w, rec] = sarima::difference(y, 4, 1);
  CHECK(w.values() == std::vector<double>{1, 2, 3, 4});
  REQUIRE(rec.diffs.size() == 1);
  CHECK(rec.diffs[0].initial_values == std::vector<double>{10, 20, 30, 40});
}

TEST_CASE("difference then integrate restores the series exactly") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> vals(40);
    for (auto& v : vals) v = dist(rng);
    auto y = make_series(vals);
    int order = 1 + static_cast<int>(rng() % 2);
    int lag = (rep % 2 == 0) ? 1 : 12;
    auto [w, rec] = sarima::difference(y, lag, order);
    auto back = sarima::integrate(w, rec);
    CHECK(back.start() == y.start());
    CHECK(testutil::max_abs_diff(back.values(), y.values()) < 1e-10);
  }
}

TEST_CASE("stacked regular and seasonal differencing round-trips") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(1.0, 9.0);
  std::vector<double> vals(60);
  for (auto& v : vals) v = dist(rng);
  auto y = make_series(vals);
  auto [w, rec] = sarima::apply_transform(y, std::nullopt, 1, 1, 12);
  CHECK(w.size() == 60 - 1 - 12);
  auto back = sarima::invert_transform(w, rec);
  CHECK(testutil::max_abs_diff(back.values(), y.values()) < 1e-10);
}

TEST_CASE("apply_transform composes box-cox with differencing") {
  std::vector<double> vals(30);
  for (int i = 0; i < 30; ++i) vals[i] = std::exp(0.05 * (i + 1));
  auto y = make_series(vals);
  auto [w, rec] = sarima::apply_transform(y, 0.0, 2, 0, 12);
  REQUIRE(rec.lambda.has_value());
  CHECK(*rec.lambda == 0.0);
  CHECK(w.size() == 28);
  // Log then double-difference of an exact exponential is identically zero.
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(std::abs(w[i]) < 1e-12);
  auto back = sarima::invert_transform(w, rec);
  CHECK(testutil::max_abs_diff(back.values(), y.values()) < 1e-9);
}

TEST_CASE("integrate_extended continues a differenced path") {
  auto y = make_series({3, 5, 8, 12, 17});  // first differences 2,3,4,5
  auto [w, rec] = sarima::difference(y, 1, 1);
  std::vector<double> future_w = {6, 7};
  auto extended = sarima::integrate_extended(w, rec, future_w);
  REQUIRE(extended.size() == y.size() + 2);
  CHECK(extended[extended.size() - 2] == doctest::Approx(23.0));
  CHECK(extended[extended.size() - 1] == doctest::Approx(30.0));
  CHECK(extended.end() == y.end().plus(2));
}
