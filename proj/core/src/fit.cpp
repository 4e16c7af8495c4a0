#include "sarima/fit.hpp"

#include <algorithm>
#include <cmath>

#include "sarima/errors.hpp"
#include "sarima/linalg.hpp"
#include "sarima/special_functions.hpp"

namespace sarima {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step, double tol,
                             int max_iter) {
    const std::size_t n = x0.size();
    if (n == 0) throw ArgumentError("nelder_mead: empty start point");

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    NelderMeadResult out;
    auto order = [&] {
        std::vector<std::size_t> ix(n + 1);
        for (std::size_t i = 0; i <= n; ++i) ix[i] = i;
        std::sort(ix.begin(), ix.end(), [&](std::size_t a, std::size_t b) {
            return fv[a] < fv[b];
        });
        std::vector<std::vector<double>> s2(n + 1);
        std::vector<double> f2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            s2[i] = simplex[ix[i]];
            f2[i] = fv[ix[i]];
        }
        simplex.swap(s2);
        fv.swap(f2);
    };

    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();
        if (std::abs(fv[n] - fv[0]) <= tol * (std::abs(fv[0]) + tol)) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;

        auto blend = [&](double c) {
            std::vector<double> x(n);
            for (std::size_t j = 0; j < n; ++j) {
                x[j] = centroid[j] + c * (simplex[n][j] - centroid[j]);
            }
            return x;
        };

        std::vector<double> xr = blend(-1.0);  // reflection
        double fr = f(xr);
        if (fr < fv[0]) {
            std::vector<double> xe = blend(-2.0);  // expansion
            double fe = f(xe);
            if (fe < fr) {
                simplex[n] = std::move(xe);
                fv[n] = fe;
            } else {
                simplex[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = std::move(xr);
            fv[n] = fr;
        } else {
            std::vector<double> xc = blend(fr < fv[n] ? -0.5 : 0.5);  // contraction
            double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = std::move(xc);
                fv[n] = fc;
            } else {  // shrink toward the best vertex
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    }
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    out.x = simplex[0];
    out.value = fv[0];
    out.iterations = iter;
    return out;
}

FilterOutput filter_series(const ModelSpec& spec, const CoefficientSet& coef,
                           const std::vector<double>& w) {
    spec.validate();
    ArmaStateSpace ss(expand_polynomials(spec, coef));
    return ss.filter(w);
}

namespace {

// Unconstrained parameter blocks: each factor's values pass through tanh to
// partial correlations, then Durbin-Levinson to coefficients.  MA factors use
// the dual polynomial so invertibility mirrors stationarity.
CoefficientSet decode(const ModelSpec& spec, const std::vector<double>& u) {
    auto block = [&](std::size_t off, int len, bool ma) {
        std::vector<double> pac(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) pac[i] = std::tanh(u[off + i]);
        std::vector<double> a = pacf_to_ar(pac);
        if (ma) {
            for (double& v : a) v = -v;
        }
        return a;
    };
    CoefficientSet c;
    std::size_t off = 0;
    c.ar = block(off, spec.p, false); off += spec.p;
    c.ma = block(off, spec.q, true); off += spec.q;
    c.sar = block(off, spec.P, false); off += spec.P;
    c.sma = block(off, spec.Q, true);
    return c;
}

constexpr double kPenalty = 1e100;

}  // namespace

FittedModel fit(const TimeSeries& y, const ModelSpec& spec, std::optional<double> lambda) {
    spec.validate();
    const int k = spec.n_coef();
    const int n_diff = spec.d + spec.D * spec.s;
    const int min_len = 3 * (spec.p + spec.q + (spec.P + spec.Q) * spec.s) + n_diff;
    if (static_cast<int>(y.size()) <= std::max(min_len, n_diff + 1)) {
        throw DataError("fit: series of length " + std::to_string(y.size()) +
                        " is too short for " + spec.str());
    }

    auto [wseries, record] = apply_transform(y, lambda, spec.d, spec.D, spec.s);
    std::vector<double> w = wseries.values();
    const int n = static_cast<int>(w.size());

    double mu = 0.0;
    if (n_diff == 0) {
        for (double v : w) mu += v;
        mu /= n;
        for (double& v : w) v -= mu;
    }

    FittedModel model;
    model.spec = spec;
    model.transform = record;
    model.train = y;
    model.mean = mu;

    std::vector<double> u_hat;
    if (k > 0) {
        auto css_of = [&](const std::vector<double>& u) {
            try {
                CoefficientSet c = decode(spec, u);
                double css = css_objective(spec, c, w);
                if (!std::isfinite(css)) return kPenalty;
                return 0.5 * n * std::log(css / n);
            } catch (const NumericError&) {
                return kPenalty;
            }
        };
        auto nll_of = [&](const std::vector<double>& u) {
            try {
                CoefficientSet c = decode(spec, u);
                FilterOutput fo = filter_series(spec, c, w);
                if (!std::isfinite(fo.loglik)) return kPenalty;
                return -fo.loglik;
            } catch (const NumericError&) {
                return kPenalty;
            }
        };

        std::vector<double> u0(static_cast<std::size_t>(k), 0.0);
        NelderMeadResult css_stage = nelder_mead(css_of, u0, 0.1, 1e-8, 2000);
        NelderMeadResult ml_stage = nelder_mead(nll_of, css_stage.x, 0.1, 1e-8, 2000);
        // one restart with a fresh simplex tightens the first-order conditions
        NelderMeadResult polish = nelder_mead(nll_of, ml_stage.x, 0.01, 1e-8, 2000);
        if (polish.value < ml_stage.value) ml_stage = polish;
        if (!ml_stage.converged) {
            throw ConvergenceError("fit: likelihood search for " + spec.str() +
                                       " did not converge",
                                   ml_stage.x, ml_stage.value);
        }
        u_hat = ml_stage.x;
        model.coef = decode(spec, u_hat);
    }

    FilterOutput fo = filter_series(spec, model.coef, w);
    model.coef.sigma2 = fo.sigma2_hat;
    model.loglik = fo.loglik;
    model.aic = -2.0 * model.loglik + 2.0 * (k + 1);

    model.residuals.assign(static_cast<std::size_t>(n_diff), 0.0);
    model.residuals.insert(model.residuals.end(), fo.innovations.begin(),
                           fo.innovations.end());

    if (k > 0) {
        // Observed information in coefficient space: central differences of
        // the concentrated negative log-likelihood around the optimum.
        auto nll_coef = [&](const std::vector<double>& c) {
            CoefficientSet cs = CoefficientSet::from_flat(spec, c);
            auto validity = check_coefficients(spec, cs);
            if (!validity.ok) throw NumericError(validity.reason);
            FilterOutput f2 = filter_series(spec, cs, w);
            return -f2.loglik;
        };
        std::vector<double> c0 = model.coef.flat();
        try {
            Matrix hess(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
            std::vector<double> h(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) h[i] = 1e-4 * std::max(1.0, std::abs(c0[i]));
            const double f0 = nll_coef(c0);
            for (int i = 0; i < k; ++i) {
                std::vector<double> cp = c0, cm = c0;
                cp[i] += h[i];
                cm[i] -= h[i];
                hess(i, i) = (nll_coef(cp) - 2.0 * f0 + nll_coef(cm)) / (h[i] * h[i]);
            }
            for (int i = 0; i < k; ++i) {
                for (int j = i + 1; j < k; ++j) {
                    std::vector<double> cpp = c0, cpm = c0, cmp = c0, cmm = c0;
                    cpp[i] += h[i]; cpp[j] += h[j];
                    cpm[i] += h[i]; cpm[j] -= h[j];
                    cmp[i] -= h[i]; cmp[j] += h[j];
                    cmm[i] -= h[i]; cmm[j] -= h[j];
                    double v = (nll_coef(cpp) - nll_coef(cpm) - nll_coef(cmp) +
                                nll_coef(cmm)) /
                               (4.0 * h[i] * h[j]);
                    hess(i, j) = v;
                    hess(j, i) = v;
                }
            }
            Matrix cov = spd_inverse(hess);
            std::vector<double> se(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) se[i] = std::sqrt(cov(i, i));
            model.std_errors = se;
            model.z_values.resize(static_cast<std::size_t>(k));
            model.p_values.resize(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                model.z_values[i] = c0[i] / se[i];
                model.p_values[i] = 2.0 * normal_sf(std::abs(model.z_values[i]));
            }
        } catch (const NumericError&) {
            // curvature not resolvable at the optimum: SEs stay unavailable
            model.std_errors.reset();
            model.z_values.clear();
            model.p_values.clear();
        }
    }
    return model;
}

}  // namespace sarima
