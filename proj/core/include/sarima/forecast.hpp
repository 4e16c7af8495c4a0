#pragma once

#include <vector>

#include "sarima/model.hpp"

namespace sarima {

// Point forecasts and interval bounds on the original scale of the data.
struct ForecastSet {
    YearMonth origin;  // month of the first forecast
    int horizon = 0;
    double level = 0.95;
    std::vector<double> point;
    std::vector<double> lower;
    std::vector<double> upper;
    // Interval half-widths on the transformed scale, before back-transform.
    std::vector<double> half_width;
};

// Moving-average representation of the model including its differencing
// operators: psi_1..psi_h from dividing the MA polynomial by the full
// AR x differencing polynomial (psi_0 = 1 is implicit).
std::vector<double> psi_weights(const FittedModel& model, int h);

// h-step forecasts from the end of the training series.  Point forecasts
// propagate the filtered state; interval half-widths on the transformed
// scale are z * sigma * sqrt(sum_{j<h} psi_j^2), and both endpoints are
// back-transformed individually, so bounds are exact quantiles of the
// transformed-scale Gaussian rather than symmetric bands.
ForecastSet forecast(const FittedModel& model, int h, double level = 0.95);

// Rolling one-step evaluation over a holdout sample.
struct HoldoutRow {
    YearMonth month;
    double actual = 0.0;
    double forecast = 0.0;
    double error = 0.0;  // actual - forecast
};

struct HoldoutLedger {
    std::vector<HoldoutRow> rows;
    double mape = 0.0;  // percent
};

// Walks the holdout month by month: each forecast uses the frozen
// coefficients but conditions on every actual observed so far.  The test
// series must start exactly one month after the training series ends.
HoldoutLedger one_step_holdout(const FittedModel& model, const TimeSeries& test);

// Mean absolute percentage error (in percent) of a ledger.  Throws DataError
// when any actual is zero.
double mape(const std::vector<HoldoutRow>& rows);

// Ledger assembled from already-known actual and forecast columns; used when
// replaying published evaluations.
HoldoutLedger make_ledger(YearMonth start, const std::vector<double>& actuals,
                          const std::vector<double>& forecasts);

}  // namespace sarima
