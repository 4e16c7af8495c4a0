// Micro-benchmarks for the hot paths: likelihood evaluation dominates
// estimation, estimation dominates selection.  Sizes mirror a typical
// monthly workload (eight years of data, seasonal lag 12).

#include <benchmark/benchmark.h>

#include "sarima/correlogram.hpp"
#include "sarima/fit.hpp"
#include "sarima/forecast.hpp"
#include "sarima/hypothesis_tests.hpp"
#include "sarima/kalman.hpp"
#include "sarima/model.hpp"
#include "sarima/simulate.hpp"
#include "sarima/transform.hpp"

namespace {

sarima::ModelSpec monthly_spec() {
  sarima::ModelSpec s;
  s.p = 2;
  s.d = 1;
  s.Q = 2;
  s.s = 12;
  return s;
}

sarima::CoefficientSet monthly_coef() {
  sarima::CoefficientSet c;
  c.ar = {0.69, -0.48};
  c.sma = {0.55, 0.20};
  c.sigma2 = 1.0;
  return c;
}

sarima::TimeSeries monthly_series(int n) {
  return sarima::simulate(monthly_spec(), monthly_coef(), n, 11);
}

void bm_exact_loglik(benchmark::State& state) {
  auto spec = monthly_spec();
  auto coef = monthly_coef();
  auto y = monthly_series(96);
  auto diffed = sarima::difference(y, 1, 1).first.values();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::exact_loglik(spec, coef, diffed));
  }
}
BENCHMARK(bm_exact_loglik);

void bm_css_objective(benchmark::State& state) {
  auto spec = monthly_spec();
  auto coef = monthly_coef();
  auto y = monthly_series(96);
  auto diffed = sarima::difference(y, 1, 1).first.values();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::css_objective(spec, coef, diffed));
  }
}
BENCHMARK(bm_css_objective);

void bm_acf_24(benchmark::State& state) {
  auto y = monthly_series(96);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::acf(y, 24));
  }
}
BENCHMARK(bm_acf_24);

void bm_shapiro_wilk(benchmark::State& state) {
  auto y = monthly_series(96);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::shapiro_wilk(y.values()));
  }
}
BENCHMARK(bm_shapiro_wilk);

void bm_fit_ar1(benchmark::State& state) {
  sarima::ModelSpec spec;
  spec.p = 1;
  sarima::CoefficientSet coef;
  coef.ar = {0.6};
  auto y = sarima::simulate(spec, coef, 96, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::fit(y, spec));
  }
}
BENCHMARK(bm_fit_ar1);

void bm_fit_seasonal(benchmark::State& state) {
  auto y = monthly_series(96);
  auto spec = monthly_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::fit(y, spec));
  }
}
BENCHMARK(bm_fit_seasonal);

void bm_forecast_12(benchmark::State& state) {
  auto y = monthly_series(96);
  auto model = sarima::fit(y, monthly_spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sarima::forecast(model, 12, 0.95));
  }
}
BENCHMARK(bm_forecast_12);

}  // namespace

BENCHMARK_MAIN();
