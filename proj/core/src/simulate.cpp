#include "sarima/simulate.hpp"

#include <cmath>

#include "sarima/errors.hpp"

namespace sarima {

double GaussianSampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSampler::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

TimeSeries simulate(const ModelSpec& spec, const CoefficientSet& coef, int n,
                    std::uint64_t seed, int burn_in, YearMonth start) {
    spec.validate();
    if (n < 1) throw ArgumentError("simulate: n must be positive");
    auto validity = check_coefficients(spec, coef);
    if (!validity.ok) throw NumericError("simulate: " + validity.reason);

    ExpandedPolynomials poly = expand_polynomials(spec, coef);
    const int p = static_cast<int>(poly.ar.size());
    const int q = static_cast<int>(poly.ma.size());
    const int n_diff = spec.d + spec.D * spec.s;
    if (n <= n_diff) {
        throw ArgumentError("simulate: n must exceed the differencing order");
    }
    const int n_arma = n - n_diff;
    if (burn_in < 0) burn_in = 10 * std::max({p, q, 1});

    GaussianSampler normal(seed);
    const double sd = std::sqrt(coef.sigma2);
    const int total = burn_in + n_arma;
    std::vector<double> w(total), e(total);
    for (int t = 0; t < total; ++t) {
        double et = sd * normal();
        double wt = et;
        for (int i = 1; i <= p && i <= t; ++i) wt += poly.ar[i - 1] * w[t - i];
        for (int j = 1; j <= q && j <= t; ++j) wt += poly.ma[j - 1] * e[t - j];
        e[t] = et;
        w[t] = wt;
    }
    std::vector<double> arma(w.begin() + burn_in, w.end());

    // Integrate from zero initial values: d stages at lag 1, then D at lag s.
    TransformRecord record;
    for (int i = 0; i < spec.d; ++i) {
        record.diffs.push_back(DiffStage{1, std::vector<double>(1, 0.0)});
    }
    for (int i = 0; i < spec.D; ++i) {
        record.diffs.push_back(DiffStage{spec.s, std::vector<double>(spec.s, 0.0)});
    }
    TimeSeries diffed(start.plus(n_diff), spec.s >= 2 ? spec.s : 12, std::move(arma));
    TimeSeries out = integrate(diffed, record);
    return TimeSeries(start, out.period(), out.values());
}

}  // namespace sarima
