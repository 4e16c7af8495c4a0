#pragma once

// Published 2017 overseas-remittance holdout: twelve monthly actuals, the
// one-step forecasts produced by a (2,1,0)(0,0,2)[12] model frozen at the
// end of 2016, and the resulting errors. Values are in millions of USD.
// Used as a known-good fixture for ledger arithmetic and error diagnostics.

#include <array>

#include "sarima/model.hpp"
#include "sarima/time_series.hpp"

namespace refdata {

inline constexpr std::array<double, 12> kOfw2017Actuals = {
    2168.700, 2169.241, 2615.216, 2082.618, 2309.758, 2467.073,
    2282.731, 2499.483, 2186.091, 2275.151, 2262.313, 2741.425};

inline constexpr std::array<double, 12> kOfw2017Forecasts = {
    2145.530, 2236.218, 2457.323, 2337.417, 2306.372, 2398.420,
    2237.650, 2408.218, 2475.588, 2214.368, 2289.175, 2580.624};

inline constexpr std::array<double, 12> kOfw2017Errors = {
    23.170,  -66.977, 157.893, -254.799, 3.386,   68.653,
    45.081,  91.265,  -289.497, 60.783,  -26.862, 160.801};

inline constexpr sarima::YearMonth kOfw2017Start{2017, 1};

// Coefficients and standard errors reported for that model.
inline constexpr std::array<double, 2> kRefAr = {0.6877, -0.4831};
inline constexpr std::array<double, 2> kRefSma = {0.9972, 0.4131};
inline constexpr std::array<double, 4> kRefSe = {0.0980, 0.0937, 0.1207, 0.1147};

inline sarima::ModelSpec ref_spec() {
  sarima::ModelSpec spec;
  spec.p = 2;
  spec.d = 1;
  spec.q = 0;
  spec.P = 0;
  spec.D = 0;
  spec.Q = 2;
  spec.s = 12;
  return spec;
}

inline sarima::CoefficientSet ref_coef(double sigma2 = 2500.0) {
  sarima::CoefficientSet coef;
  coef.ar = {kRefAr[0], kRefAr[1]};
  coef.sma = {kRefSma[0], kRefSma[1]};
  coef.sigma2 = sigma2;
  return coef;
}

}  // namespace refdata
