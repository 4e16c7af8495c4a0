#pragma once

#include <vector>

#include "sarima/time_series.hpp"

namespace sarima {

// Sample ACF or PACF for lags 1..max_lag together with the white-noise
// confidence band.  Lag 0 is identically 1 for the ACF and is not stored.
struct Correlogram {
    enum class Kind { acf, pacf };

    Kind kind = Kind::acf;
    int n = 0;                   // observations behind the estimate
    double level = 0.95;
    double band = 0.0;           // +/- z_{(1+level)/2} / sqrt(n)
    std::vector<double> values;  // values[k-1] belongs to lag k
    bool clipped = false;        // pacf only: a partial correlation was clipped to +/-1

    double at(int lag) const { return values.at(static_cast<std::size_t>(lag) - 1); }
};

// Half-width of the white-noise band: z_{(1+level)/2} / sqrt(n).
double correlogram_band(int n, double level);

// Biased (denominator n) sample autocorrelations for lags 1..max_lag.
// Requires 1 <= max_lag < n and a non-constant sequence.
Correlogram acf(const std::vector<double>& x, int max_lag, double level = 0.95);
Correlogram acf(const TimeSeries& x, int max_lag, double level = 0.95);

// Partial autocorrelations via the Durbin-Levinson recursion applied to the
// sample ACF.  A partial correlation that leaves [-1, 1] through rounding is
// clipped and flagged.
Correlogram pacf(const std::vector<double>& x, int max_lag, double level = 0.95);
Correlogram pacf(const TimeSeries& x, int max_lag, double level = 0.95);

}  // namespace sarima
