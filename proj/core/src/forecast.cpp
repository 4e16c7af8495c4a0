#include "sarima/forecast.hpp"

#include <cmath>

#include "sarima/errors.hpp"
#include "sarima/fit.hpp"
#include "sarima/kalman.hpp"
#include "sarima/special_functions.hpp"
#include "sarima/transform.hpp"

namespace sarima {

std::vector<double> psi_weights(const FittedModel& model, int h) {
    if (h < 1) throw ArgumentError("psi_weights: h must be positive");
    ExpandedPolynomials poly = expand_polynomials(model.spec, model.coef);

    // Full autoregressive side: AR(B) x (1-B)^d x (1-B^s)^D as 1 - sum a_i B^i.
    std::vector<double> full{1.0};
    auto mult = [&](const std::vector<double>& factor) {
        std::vector<double> out(full.size() + factor.size() - 1, 0.0);
        for (std::size_t i = 0; i < full.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] += full[i] * factor[j];
        full = std::move(out);
    };
    {
        std::vector<double> arp(poly.ar.size() + 1, 0.0);
        arp[0] = 1.0;
        for (std::size_t i = 0; i < poly.ar.size(); ++i) arp[i + 1] = -poly.ar[i];
        mult(arp);
        for (int i = 0; i < model.spec.d; ++i) mult({1.0, -1.0});
        std::vector<double> seas(static_cast<std::size_t>(model.spec.s) + 1, 0.0);
        seas[0] = 1.0;
        seas[model.spec.s] = -1.0;
        for (int i = 0; i < model.spec.D; ++i) mult(seas);
    }

    // psi_j = theta_j + sum_{i=1..j} a_i psi_{j-i}, with a_i = -full[i].
    std::vector<double> psi(static_cast<std::size_t>(h) + 1, 0.0);
    psi[0] = 1.0;
    for (int j = 1; j <= h; ++j) {
        double v = (j <= static_cast<int>(poly.ma.size())) ? poly.ma[j - 1] : 0.0;
        for (int i = 1; i <= j && i < static_cast<int>(full.size()); ++i) {
            v += -full[i] * psi[j - i];
        }
        psi[j] = v;
    }
    return std::vector<double>(psi.begin() + 1, psi.end());
}

namespace {

// Differenced training values on the transformed scale, mean untouched.
std::vector<double> training_w(const FittedModel& model) {
    TimeSeries z = model.transform.lambda ? box_cox(model.train, *model.transform.lambda)
                                          : model.train;
    for (const auto& stage : model.transform.diffs) {
        z = difference(z, stage.lag, 1).first;
    }
    return z.values();
}

ForecastSet forecast_from(const FittedModel& model, const std::vector<double>& w,
                          YearMonth origin, int h, double level) {
    if (h < 1) throw ArgumentError("forecast: horizon must be positive");
    if (!(level > 0.0 && level < 1.0)) {
        throw ArgumentError("forecast: level must lie in (0, 1)");
    }

    std::vector<double> centered(w);
    for (double& v : centered) v -= model.mean;
    ArmaStateSpace ss(expand_polynomials(model.spec, model.coef));
    FilterOutput fo = ss.filter(centered);
    std::vector<double> wf = ss.predict_path(fo.state, h);
    for (double& v : wf) v += model.mean;

    // Undo differencing with the training tail present, then keep the new part.
    TimeSeries wser(origin.plus(-static_cast<int>(w.size())), model.train.period(), w);
    TimeSeries z = integrate_extended(wser, model.transform, wf);

    const double zq = normal_quantile(0.5 * (1.0 + level));
    const double sd = std::sqrt(model.coef.sigma2);
    std::vector<double> psi = psi_weights(model, h);

    ForecastSet out;
    out.origin = origin;
    out.horizon = h;
    out.level = level;
    out.point.resize(h);
    out.lower.resize(h);
    out.upper.resize(h);
    out.half_width.resize(h);

    double cum = 1.0;  // psi_0^2
    const std::size_t base = z.size() - static_cast<std::size_t>(h);
    const double lambda = model.transform.lambda ? *model.transform.lambda : 0.0;
    const bool has_lambda = model.transform.lambda.has_value();
    for (int j = 0; j < h; ++j) {
        double zf = z[base + j];
        double hw = zq * sd * std::sqrt(cum);
        out.half_width[j] = hw;
        if (has_lambda) {
            out.point[j] = inv_box_cox_value(zf, lambda);
            out.lower[j] = inv_box_cox_value(zf - hw, lambda);
            out.upper[j] = inv_box_cox_value(zf + hw, lambda);
        } else {
            out.point[j] = zf;
            out.lower[j] = zf - hw;
            out.upper[j] = zf + hw;
        }
        cum += psi[j] * psi[j];  // adds psi_{j+1}^2 for the next step
    }
    return out;
}

}  // namespace

ForecastSet forecast(const FittedModel& model, int h, double level) {
    std::vector<double> w = training_w(model);
    return forecast_from(model, w, model.train.end().plus(1), h, level);
}

HoldoutLedger one_step_holdout(const FittedModel& model, const TimeSeries& test) {
    if (test.start() != model.train.end().plus(1)) {
        throw DataError("one_step_holdout: test series must start at " +
                        model.train.end().plus(1).str() + ", got " + test.start().str());
    }
    if (test.period() != model.train.period()) {
        throw DataError("one_step_holdout: test period disagrees with training period");
    }

    HoldoutLedger ledger;
    ledger.rows.resize(test.size());

    // Extend the observed sample one month at a time; coefficients stay frozen.
    std::vector<double> values = model.train.values();
    for (std::size_t i = 0; i < test.size(); ++i) {
        TimeSeries observed(model.train.start(), model.train.period(), values);
        FittedModel rolled = model;
        rolled.train = observed;
        ForecastSet fc = forecast(rolled, 1, 0.95);
        HoldoutRow& row = ledger.rows[i];
        row.month = test.month_at(i);
        row.actual = test[i];
        row.forecast = fc.point[0];
        row.error = row.actual - row.forecast;
        values.push_back(test[i]);
    }
    ledger.mape = mape(ledger.rows);
    return ledger;
}

double mape(const std::vector<HoldoutRow>& rows) {
    if (rows.empty()) throw ArgumentError("mape: empty ledger");
    double acc = 0.0;
    for (const auto& r : rows) {
        if (r.actual == 0.0) {
            throw DataError("mape: actual value for " + r.month.str() + " is zero");
        }
        acc += std::abs(r.error / r.actual);
    }
    return 100.0 * acc / static_cast<double>(rows.size());
}

HoldoutLedger make_ledger(YearMonth start, const std::vector<double>& actuals,
                          const std::vector<double>& forecasts) {
    if (actuals.size() != forecasts.size() || actuals.empty()) {
        throw ArgumentError("make_ledger: actual and forecast columns must match");
    }
    HoldoutLedger ledger;
    ledger.rows.resize(actuals.size());
    for (std::size_t i = 0; i < actuals.size(); ++i) {
        HoldoutRow& row = ledger.rows[i];
        row.month = start.plus(static_cast<int>(i));
        row.actual = actuals[i];
        row.forecast = forecasts[i];
        row.error = actuals[i] - forecasts[i];
    }
    ledger.mape = mape(ledger.rows);
    return ledger;
}

}  // namespace sarima
