#include "sarima/correlogram.hpp"

#include <cmath>
#include <string>

#include "sarima/errors.hpp"
#include "sarima/special_functions.hpp"

namespace sarima {

double correlogram_band(int n, double level) {
    if (n < 1) throw ArgumentError("correlogram_band: n must be positive");
    if (!(level > 0.0 && level < 1.0)) {
        throw ArgumentError("correlogram_band: level must lie in (0, 1)");
    }
    return normal_quantile(0.5 * (1.0 + level)) / std::sqrt(static_cast<double>(n));
}

namespace {

std::vector<double> sample_acf(const std::vector<double>& x, int max_lag) {
    const std::size_t n = x.size();
    if (max_lag < 1) throw ArgumentError("acf: max_lag must be >= 1");
    if (static_cast<std::size_t>(max_lag) >= n) {
        throw DataError("acf: series of length " + std::to_string(n) +
                        " cannot support lag " + std::to_string(max_lag));
    }
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double c0 = 0.0;
    for (double v : x) c0 += (v - mean) * (v - mean);
    if (c0 <= 0.0) throw DataError("acf: series is constant");

    std::vector<double> r(static_cast<std::size_t>(max_lag));
    for (int k = 1; k <= max_lag; ++k) {
        double ck = 0.0;
        for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t) {
            ck += (x[t] - mean) * (x[t - k] - mean);
        }
        r[k - 1] = ck / c0;  // same denominator n as c0: biased convention
    }
    return r;
}

}  // namespace

Correlogram acf(const std::vector<double>& x, int max_lag, double level) {
    Correlogram c;
    c.kind = Correlogram::Kind::acf;
    c.n = static_cast<int>(x.size());
    c.level = level;
    c.band = correlogram_band(c.n, level);
    c.values = sample_acf(x, max_lag);
    return c;
}

Correlogram acf(const TimeSeries& x, int max_lag, double level) {
    return acf(x.values(), max_lag, level);
}

Correlogram pacf(const std::vector<double>& x, int max_lag, double level) {
    Correlogram c;
    c.kind = Correlogram::Kind::pacf;
    c.n = static_cast<int>(x.size());
    c.level = level;
    c.band = correlogram_band(c.n, level);

    std::vector<double> r = sample_acf(x, max_lag);

    // Durbin-Levinson: phi[k][k] is the lag-k partial autocorrelation.
    std::vector<double> phi_prev(static_cast<std::size_t>(max_lag) + 1, 0.0);
    std::vector<double> phi_cur(static_cast<std::size_t>(max_lag) + 1, 0.0);
    c.values.resize(static_cast<std::size_t>(max_lag));

    double denom = 1.0;  // prediction error variance ratio v_k / c0
    for (int k = 1; k <= max_lag; ++k) {
        double num = r[k - 1];
        for (int j = 1; j < k; ++j) num -= phi_prev[j] * r[k - 1 - j];
        double pk;
        if (denom <= 0.0) {
            // earlier clipping exhausted the prediction error; pin at the edge
            pk = (num >= 0.0) ? 1.0 : -1.0;
            c.clipped = true;
        } else {
            pk = num / denom;
            if (pk > 1.0) {
                pk = 1.0;
                c.clipped = true;
            } else if (pk < -1.0) {
                pk = -1.0;
                c.clipped = true;
            }
        }
        phi_cur[k] = pk;
        for (int j = 1; j < k; ++j) phi_cur[j] = phi_prev[j] - pk * phi_prev[k - j];
        c.values[k - 1] = pk;
        denom *= (1.0 - pk * pk);
        std::swap(phi_prev, phi_cur);
    }
    return c;
}

Correlogram pacf(const TimeSeries& x, int max_lag, double level) {
    return pacf(x.values(), max_lag, level);
}

}  // namespace sarima
