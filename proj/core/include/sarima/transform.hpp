#pragma once

#include <optional>
#include <vector>

#include "sarima/time_series.hpp"

namespace sarima {

// One application of the lag-difference operator (1 - B^lag).  The values
// consumed from the front of the series are kept so the step can be undone
// exactly by cumulative summation.
struct DiffStage {
    int lag = 1;
    std::vector<double> initial_values;  // first `lag` observations before differencing
};

// What was done to a series before modelling, in application order.
// lambda is the variance-stabilizing exponent: 0 means natural log,
// absent means the values were left alone.
struct TransformRecord {
    std::optional<double> lambda;
    std::vector<DiffStage> diffs;
};

// (y^lambda - 1) / lambda, natural log at lambda == 0.  Requires every
// value positive; throws DataError naming the first offending index.
TimeSeries box_cox(const TimeSeries& y, double lambda);

// Exact inverse.  Requires lambda*z + 1 > 0 for every value when
// lambda != 0; throws DataError naming the first offending index.
TimeSeries inv_box_cox(const TimeSeries& z, double lambda);
double inv_box_cox_value(double z, double lambda);

// Profile-likelihood estimate of lambda over a uniform grid (default
// [-2, 2] in steps of 0.01).  Ties break toward the smaller lambda.
double estimate_lambda(const TimeSeries& y, double lo = -2.0, double hi = 2.0,
                       double step = 0.01);

// Applies (1 - B^lag)^order.  The result is shorter by lag*order and starts
// lag*order months later.  Throws DataError when the series is too short to
// lose that many points.
std::pair<TimeSeries, TransformRecord> difference(const TimeSeries& y, int lag, int order);

// Undoes every stage in `record` (in reverse) by cumulative summation.
// The lambda field is ignored here; use inv_box_cox for that step.
TimeSeries integrate(const TimeSeries& w, const TransformRecord& record);

// As `integrate`, but first extends the differenced series with `extension`
// (future values on the differenced scale) and then undoes the stages.
// Returns the full integrated series; the last extension.size() values are
// the integrated continuation.
TimeSeries integrate_extended(const TimeSeries& w, const TransformRecord& record,
                              const std::vector<double>& extension);

// Full forward chain: Box-Cox (when record.lambda is set) followed by the
// differencing stages listed in spec order d times lag 1, D times lag s.
// Returns the transformed series and the completed record.
std::pair<TimeSeries, TransformRecord> apply_transform(const TimeSeries& y,
                                                       std::optional<double> lambda,
                                                       int d, int D, int s);

// Full inverse chain: integrate, then invert Box-Cox when present.
TimeSeries invert_transform(const TimeSeries& w, const TransformRecord& record);

}  // namespace sarima
