#include "sarima/kalman.hpp"

#include <cmath>

#include "sarima/errors.hpp"

namespace sarima {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
}

ArmaStateSpace::ArmaStateSpace(const ExpandedPolynomials& poly) {
    const int p = static_cast<int>(poly.ar.size());
    const int q = static_cast<int>(poly.ma.size());
    m_ = std::max(p, q + 1);
    if (m_ < 1) m_ = 1;
    phi_.assign(m_, 0.0);
    for (int i = 0; i < p; ++i) phi_[i] = poly.ar[i];
    rvec_.assign(m_, 0.0);
    rvec_[0] = 1.0;
    for (int i = 0; i < q; ++i) rvec_[i + 1] = poly.ma[i];
}

// (T x)_i = phi_{i+1} x_0 + x_{i+1}; the companion shift plus feedback column.
std::vector<double> ArmaStateSpace::apply_t(const std::vector<double>& x) const {
    std::vector<double> y(m_);
    for (int i = 0; i < m_; ++i) {
        y[i] = phi_[i] * x[0] + ((i + 1 < m_) ? x[i + 1] : 0.0);
    }
    return y;
}

Matrix ArmaStateSpace::stationary_covariance() const {
    const std::size_t m = static_cast<std::size_t>(m_);
    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        a(i, 0) = phi_[i];
        if (i + 1 < m) a(i, i + 1) = 1.0;
    }
    Matrix c(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c(i, j) = rvec_[i] * rvec_[j];

    // Doubling iteration: C accumulates sum_k A^k C0 A'^k with A squared each
    // round, converging quadratically for a stable transition.
    for (int iter = 0; iter < 120; ++iter) {
        Matrix delta = sandwich(a, c);
        double change = delta.max_abs();
        double scale = c.max_abs();
        c = c + delta;
        // keep symmetry against rounding drift
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                double v = 0.5 * (c(i, j) + c(j, i));
                c(i, j) = v;
                c(j, i) = v;
            }
        }
        if (change <= 1e-14 * (1.0 + scale)) return c;
        a = a * a;
        if (a.max_abs() > 1e12) break;  // diverging: transition not stable
    }
    throw NumericError("stationary covariance iteration failed to converge");
}

FilterOutput ArmaStateSpace::filter(const std::vector<double>& w) const {
    const int m = m_;
    const int n = static_cast<int>(w.size());
    if (n == 0) throw ArgumentError("filter: empty series");

    Matrix p = stationary_covariance();
    std::vector<double> a(m, 0.0);

    FilterOutput out;
    out.n = n;
    out.innovations.resize(n);
    out.f.resize(n);

    std::vector<double> k(m);       // T P Z'
    Matrix tp(m, m);                // T P
    Matrix next(m, m);

    for (int t = 0; t < n; ++t) {
        double ft = p(0, 0);
        if (!(ft > 1e-12) || !std::isfinite(ft)) {
            throw NumericError("filter: innovation variance degenerated");
        }
        double vt = w[t] - a[0];
        out.innovations[t] = vt;
        out.f[t] = ft;
        out.ssq += vt * vt / ft;
        out.sumlogf += std::log(ft);

        // K = T P Z' (first column of T P)
        for (int i = 0; i < m; ++i) {
            k[i] = phi_[i] * p(0, 0) + ((i + 1 < m) ? p(i + 1, 0) : 0.0);
        }
        // a <- T a + K v / F
        std::vector<double> ta = apply_t(a);
        for (int i = 0; i < m; ++i) a[i] = ta[i] + k[i] * vt / ft;

        // P <- T P T' - K K'/F + R R', using the companion structure:
        // (T P)_{i,:} = phi_i P_{0,:} + P_{i+1,:}
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                tp(i, j) = phi_[i] * p(0, j) + ((i + 1 < m) ? p(i + 1, j) : 0.0);
            }
        }
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double tpt = phi_[j] * tp(i, 0) + ((j + 1 < m) ? tp(i, j + 1) : 0.0);
                next(i, j) = tpt - k[i] * k[j] / ft + rvec_[i] * rvec_[j];
            }
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) {
                double v = 0.5 * (next(i, j) + next(j, i));
                p(i, j) = v;
                p(j, i) = v;
            }
        }
    }

    out.state = a;
    out.sigma2_hat = out.ssq / n;
    out.loglik = -0.5 * n * (kLog2Pi + 1.0 + std::log(out.sigma2_hat)) - 0.5 * out.sumlogf;
    return out;
}

std::vector<double> ArmaStateSpace::predict_path(std::vector<double> state, int h) const {
    if (static_cast<int>(state.size()) != m_) {
        throw ArgumentError("predict_path: state has wrong dimension");
    }
    std::vector<double> path(h);
    for (int j = 0; j < h; ++j) {
        path[j] = state[0];
        state = apply_t(state);
    }
    return path;
}

double exact_loglik(const ModelSpec& spec, const CoefficientSet& coef,
                    const std::vector<double>& w) {
    spec.validate();
    auto validity = check_coefficients(spec, coef);
    if (!validity.ok) throw NumericError("exact_loglik: " + validity.reason);
    ArmaStateSpace ss(expand_polynomials(spec, coef));
    FilterOutput fo = ss.filter(w);
    const double n = static_cast<double>(fo.n);
    const double s2 = coef.sigma2;
    return -0.5 * n * (kLog2Pi + std::log(s2)) - 0.5 * fo.sumlogf - 0.5 * fo.ssq / s2;
}

double css_objective(const ModelSpec& spec, const CoefficientSet& coef,
                     const std::vector<double>& w) {
    spec.validate();
    ExpandedPolynomials poly = expand_polynomials(spec, coef);
    const int p = static_cast<int>(poly.ar.size());
    const int q = static_cast<int>(poly.ma.size());
    const int n = static_cast<int>(w.size());

    std::vector<double> e(n);
    double css = 0.0;
    for (int t = 0; t < n; ++t) {
        double et = w[t];
        for (int i = 1; i <= p && i <= t; ++i) et -= poly.ar[i - 1] * w[t - i];
        for (int j = 1; j <= q && j <= t; ++j) et -= poly.ma[j - 1] * e[t - j];
        e[t] = et;
        css += et * et;
    }
    return css;
}

}  // namespace sarima
