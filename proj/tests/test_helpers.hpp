#pragma once

#include <cmath>
#include <vector>

#include "sarima/simulate.hpp"
#include "sarima/time_series.hpp"

namespace testutil {

inline sarima::TimeSeries make_series(std::vector<double> values,
                                      sarima::YearMonth start = {2009, 1},
                                      int period = 12) {
  return sarima::TimeSeries(start, period, std::move(values));
}

inline std::vector<double> gaussian_draws(std::uint64_t seed, std::size_t n,
                                          double sigma = 1.0) {
  sarima::GaussianSampler sampler(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = sigma * sampler();
  return out;
}

inline double mean_of(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double variance_of(const std::vector<double>& x) {
  const double m = mean_of(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size());
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  if (a.size() != b.size()) return 1e300;
  return worst;
}

}  // namespace testutil
