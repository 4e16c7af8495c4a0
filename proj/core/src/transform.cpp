#include "sarima/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sarima/errors.hpp"

namespace sarima {

TimeSeries box_cox(const TimeSeries& y, double lambda) {
    std::vector<double> z(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] <= 0.0) {
            throw DataError("box_cox: value at index " + std::to_string(i) +
                            " is not positive");
        }
        z[i] = (lambda == 0.0) ? std::log(y[i]) : (std::pow(y[i], lambda) - 1.0) / lambda;
    }
    return TimeSeries(y.start(), y.period(), std::move(z));
}

double inv_box_cox_value(double z, double lambda) {
    if (lambda == 0.0) return std::exp(z);
    double base = lambda * z + 1.0;
    if (base <= 0.0) {
        throw DataError("inv_box_cox: value outside transform range");
    }
    return std::pow(base, 1.0 / lambda);
}

TimeSeries inv_box_cox(const TimeSeries& z, double lambda) {
    std::vector<double> y(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (lambda != 0.0 && lambda * z[i] + 1.0 <= 0.0) {
            throw DataError("inv_box_cox: value at index " + std::to_string(i) +
                            " outside transform range");
        }
        y[i] = inv_box_cox_value(z[i], lambda);
    }
    return TimeSeries(z.start(), z.period(), std::move(y));
}

double estimate_lambda(const TimeSeries& y, double lo, double hi, double step) {
    if (!(lo < hi) || step <= 0.0) throw ArgumentError("estimate_lambda: bad grid");
    double sum_log = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] <= 0.0) {
            throw DataError("estimate_lambda: value at index " + std::to_string(i) +
                            " is not positive");
        }
        sum_log += std::log(y[i]);
    }
    const double n = static_cast<double>(y.size());

    double best_lambda = lo;
    double best_ll = -HUGE_VAL;
    int steps = static_cast<int>(std::floor((hi - lo) / step + 0.5));
    for (int k = 0; k <= steps; ++k) {
        double lambda = lo + k * step;
        // profile log-likelihood: -n/2 log(sigma^2(lambda)) + (lambda-1) sum log y
        double mean = 0.0;
        std::vector<double> z(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            z[i] = (std::abs(lambda) < 1e-12) ? std::log(y[i])
                                              : (std::pow(y[i], lambda) - 1.0) / lambda;
            mean += z[i];
        }
        mean /= n;
        double ss = 0.0;
        for (double v : z) ss += (v - mean) * (v - mean);
        if (ss <= 0.0) continue;  // constant transformed series, no information
        double ll = -0.5 * n * std::log(ss / n) + (lambda - 1.0) * sum_log;
        if (ll > best_ll) {
            best_ll = ll;
            best_lambda = lambda;
        }
    }
    if (best_ll == -HUGE_VAL) {
        throw NumericError("estimate_lambda: profile likelihood degenerate everywhere");
    }
    return best_lambda;
}

std::pair<TimeSeries, TransformRecord> difference(const TimeSeries& y, int lag, int order) {
    if (lag < 1) throw ArgumentError("difference: lag must be >= 1");
    if (order < 0) throw ArgumentError("difference: order must be >= 0");
    TransformRecord record;
    if (order == 0) return {y, record};

    std::vector<double> cur = y.values();
    YearMonth start = y.start();
    for (int k = 0; k < order; ++k) {
        if (cur.size() <= static_cast<std::size_t>(lag)) {
            throw DataError("difference: series too short for lag " + std::to_string(lag) +
                            " order " + std::to_string(order));
        }
        DiffStage stage;
        stage.lag = lag;
        stage.initial_values.assign(cur.begin(), cur.begin() + lag);
        std::vector<double> next(cur.size() - lag);
        for (std::size_t t = 0; t < next.size(); ++t) {
            next[t] = cur[t + lag] - cur[t];
        }
        record.diffs.push_back(std::move(stage));
        cur = std::move(next);
        start = start.plus(lag);
    }
    return {TimeSeries(start, y.period(), std::move(cur)), record};
}

namespace {

// Undoes one (1 - B^lag) stage: y[t] = w[t - lag] + y[t - lag] with the
// stored initial values in front.
std::vector<double> undo_stage(const std::vector<double>& w, const DiffStage& stage) {
    const int lag = stage.lag;
    std::vector<double> y(w.size() + static_cast<std::size_t>(lag));
    std::copy(stage.initial_values.begin(), stage.initial_values.end(), y.begin());
    for (std::size_t t = 0; t < w.size(); ++t) {
        y[t + lag] = w[t] + y[t];
    }
    return y;
}

}  // namespace

TimeSeries integrate(const TimeSeries& w, const TransformRecord& record) {
    std::vector<double> cur = w.values();
    YearMonth start = w.start();
    for (auto it = record.diffs.rbegin(); it != record.diffs.rend(); ++it) {
        if (it->initial_values.size() != static_cast<std::size_t>(it->lag)) {
            throw ArgumentError("integrate: stage is missing initial values");
        }
        cur = undo_stage(cur, *it);
        start = start.plus(-it->lag);
    }
    return TimeSeries(start, w.period(), std::move(cur));
}

TimeSeries integrate_extended(const TimeSeries& w, const TransformRecord& record,
                              const std::vector<double>& extension) {
    std::vector<double> joined = w.values();
    joined.insert(joined.end(), extension.begin(), extension.end());
    TimeSeries ext(w.start(), w.period(), std::move(joined));
    return integrate(ext, record);
}

std::pair<TimeSeries, TransformRecord> apply_transform(const TimeSeries& y,
                                                       std::optional<double> lambda,
                                                       int d, int D, int s) {
    TransformRecord record;
    record.lambda = lambda;
    TimeSeries z = lambda ? box_cox(y, *lambda) : y;
    if (d > 0) {
        auto [zd, rec_d] = difference(z, 1, d);
        z = std::move(zd);
        for (auto& st : rec_d.diffs) record.diffs.push_back(std::move(st));
    }
    if (D > 0) {
        if (s < 2) throw ArgumentError("apply_transform: seasonal differencing needs s >= 2");
        auto [zD, rec_D] = difference(z, s, D);
        z = std::move(zD);
        for (auto& st : rec_D.diffs) record.diffs.push_back(std::move(st));
    }
    return {std::move(z), std::move(record)};
}

TimeSeries invert_transform(const TimeSeries& w, const TransformRecord& record) {
    TimeSeries z = integrate(w, record);
    if (record.lambda) return inv_box_cox(z, *record.lambda);
    return z;
}

}  // namespace sarima
