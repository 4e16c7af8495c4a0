#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sarima/correlogram.hpp"
#include "sarima/errors.hpp"
#include "sarima/linalg.hpp"
#include "sarima/simulate.hpp"
#include "test_helpers.hpp"

using namespace sarima;

namespace {

// Sample autocorrelation by the direct formula, duplicated here so the
// library implementation is checked against an independent spelling.
std::vector<double> acf_direct(const std::vector<double>& x, int max_lag) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double c0 = 0.0;
  for (double v : x) c0 += (v - mean) * (v - mean);
  std::vector<double> r(max_lag);
  for (int k = 1; k <= max_lag; ++k) {
    double ck = 0.0;
    for (std::size_t t = k; t < x.size(); ++t)
      ck += (x[t] - mean) * (x[t - k] - mean);
    r[k - 1] = ck / c0;
  }
  return r;
}

// phi_kk from solving the full Yule-Walker system at each order with a
// generic linear solver; an oracle entirely independent of the recursion.
std::vector<double> pacf_toeplitz(const std::vector<double>& x, int max_lag) {
  auto r = acf_direct(x, max_lag);
  std::vector<double> out(max_lag);
  out[0] = r[0];
  for (int k = 2; k <= max_lag; ++k) {
    Matrix R(k, k);
    std::vector<double> rhs(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        int lag = std::abs(i - j);
        R(i, j) = (lag == 0) ? 1.0 : r[lag - 1];
      }
      rhs[i] = r[i];
    }
    out[k - 1] = solve(R, rhs).back();
  }
  return out;
}

}  // namespace

TEST_CASE("white-noise band widths") {
  CHECK(correlogram_band(96, 0.95) == doctest::Approx(0.2000379865148046).epsilon(1e-12));
  CHECK(correlogram_band(100, 0.95) == doctest::Approx(0.1959963984540054).epsilon(1e-12));
  CHECK(correlogram_band(100, 0.99) > correlogram_band(100, 0.95));
}

TEST_CASE("acf stores lags 1..K and matches the direct formula") {
  auto x = testutil::gaussian_draws(21, 300);
  auto cg = acf(x, 20);
  CHECK(cg.kind == Correlogram::Kind::acf);
  CHECK(cg.n == 300);
  REQUIRE(cg.values.size() == 20);
  auto direct = acf_direct(x, 20);
  for (int k = 1; k <= 20; ++k)
    CHECK(cg.at(k) == doctest::Approx(direct[k - 1]).epsilon(1e-12));
}

TEST_CASE("acf input validation") {
  auto x = testutil::gaussian_draws(1, 30);
  CHECK_THROWS_AS(acf(x, 0), ArgumentError);
  CHECK_THROWS_AS(acf(x, 30), DataError);
  std::vector<double> constant(25, 3.14);
  CHECK_THROWS_AS(acf(constant, 5), DataError);
}

TEST_CASE("acf of an AR(1) draw tracks the geometric decay") {
  ModelSpec spec;
  spec.p = 1;
  CoefficientSet coef;
  coef.ar = {0.6};
  coef.sigma2 = 1.0;
  auto y = simulate(spec, coef, 50000, 99);
  auto cg = acf(y.values(), 5);
  for (int k = 1; k <= 5; ++k)
    CHECK(cg.at(k) == doctest::Approx(std::pow(0.6, k)).epsilon(0.08));
}

TEST_CASE("acf is invariant to affine rescaling and to time reversal") {
  auto x = testutil::gaussian_draws(33, 240);
  std::vector<double> scaled(x.size()), reversed(x.rbegin(), x.rend());
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = 7.5 * x[i] - 1234.0;
  auto base = acf(x, 12);
  auto aff = acf(scaled, 12);
  auto rev = acf(reversed, 12);
  for (int k = 1; k <= 12; ++k) {
    CHECK(aff.at(k) == doctest::Approx(base.at(k)).epsilon(1e-10));
    CHECK(rev.at(k) == doctest::Approx(base.at(k)).epsilon(1e-10));
  }
}

TEST_CASE("pacf lag 1 equals the lag-1 autocorrelation") {
  auto x = testutil::gaussian_draws(8, 150);
  auto a = acf(x, 10);
  auto p = pacf(x, 10);
  CHECK(p.at(1) == doctest::Approx(a.at(1)).epsilon(1e-12));
}

TEST_CASE("pacf recursion agrees with the Yule-Walker system solve") {
  ModelSpec spec;
  spec.p = 2;
  CoefficientSet coef;
  coef.ar = {0.5, -0.3};
  auto y = simulate(spec, coef, 200, 7);
  auto p = pacf(y.values(), 20);
  auto oracle = pacf_toeplitz(y.values(), 20);
  for (int k = 1; k <= 20; ++k)
    CHECK(std::abs(p.at(k) - oracle[k - 1]) < 1e-6);
}

TEST_CASE("pacf of an AR(2) draw cuts off after lag 2") {
  ModelSpec spec;
  spec.p = 2;
  CoefficientSet coef;
  coef.ar = {0.55, -0.35};
  auto y = simulate(spec, coef, 20000, 17);
  auto p = pacf(y.values(), 12);
  CHECK(std::abs(p.at(1)) > 0.2);
  CHECK(std::abs(p.at(2)) > 0.2);
  double bound = 3.5 / std::sqrt(20000.0);
  for (int k = 3; k <= 12; ++k) CHECK(std::abs(p.at(k)) < bound);
}

TEST_CASE("pacf values stay inside [-1, 1] even for periodic input") {
  std::vector<double> x(400);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i % 2 == 0) ? 1.0 : -1.0;
  auto p = pacf(x, 30);
  for (int k = 1; k <= 30; ++k) {
    CHECK(p.at(k) >= -1.0);
    CHECK(p.at(k) <= 1.0);
  }
}

TEST_CASE("pacf clip flag stays off for well-behaved input") {
  auto x = testutil::gaussian_draws(5, 200);
  auto p = pacf(x, 20);
  CHECK_FALSE(p.clipped);
}

TEST_CASE("correlogram band level is recorded") {
  auto x = testutil::gaussian_draws(2, 96);
  auto cg = acf(x, 10, 0.95);
  CHECK(cg.level == 0.95);
  CHECK(cg.band == doctest::Approx(0.2000379865148046).epsilon(1e-12));
}
