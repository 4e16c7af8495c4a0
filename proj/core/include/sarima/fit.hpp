#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sarima/kalman.hpp"
#include "sarima/model.hpp"

namespace sarima {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Plain Nelder-Mead simplex search.  Converged means the simplex collapsed
// to the relative tolerance in function value.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step = 0.1,
                             double tol = 1e-8, int max_iter = 2000);

// One-step prediction decomposition of the differenced, mean-adjusted series
// under the given coefficients.  Exposed for diagnostics and tests.
FilterOutput filter_series(const ModelSpec& spec, const CoefficientSet& coef,
                           const std::vector<double>& w);

// Maximum-likelihood fit on the Box-Cox/differencing-transformed series.
// The conditional-sum-of-squares optimum seeds the exact-likelihood stage;
// both run on an unconstrained reparameterization (tanh to partial
// correlations to coefficients per factor), so every iterate is stationary
// and invertible.  A mean is estimated only when d + D == 0.
// Throws DataError when the series is shorter than 3x the coefficient count
// plus differencing losses, ConvergenceError when the optimizer stalls.
FittedModel fit(const TimeSeries& y, const ModelSpec& spec,
                std::optional<double> lambda = std::nullopt);

}  // namespace sarima
