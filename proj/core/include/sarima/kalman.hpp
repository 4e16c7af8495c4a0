#pragma once

#include <vector>

#include "sarima/linalg.hpp"
#include "sarima/model.hpp"

namespace sarima {

struct FilterOutput {
    int n = 0;
    double ssq = 0.0;      // sum v_t^2 / F_t
    double sumlogf = 0.0;  // sum log F_t
    double sigma2_hat = 0.0;
    double loglik = 0.0;   // Gaussian log-likelihood with sigma2 = sigma2_hat
    std::vector<double> innovations;  // one-step prediction errors v_t
    std::vector<double> f;            // innovation variances in sigma2 = 1 units
    std::vector<double> state;        // predicted state for time n+1
};

// State-space form of a stationary ARMA process written on the multiplied-out
// polynomials.  The transition matrix is companion-structured, so filter steps
// run in O(m^2) without forming it.
class ArmaStateSpace {
public:
    explicit ArmaStateSpace(const ExpandedPolynomials& poly);

    int dim() const { return m_; }

    // Exact-initialization Kalman pass over w, innovations kept in order.
    // Throws NumericError when the start-of-sample covariance cannot be
    // resolved or an innovation variance degenerates.
    FilterOutput filter(const std::vector<double>& w) const;

    // Mean path h steps past a predicted state, without further updates.
    std::vector<double> predict_path(std::vector<double> state, int h) const;

    // Stationary state covariance, solving P = T P T' + R R' by doubling.
    Matrix stationary_covariance() const;

private:
    int m_ = 1;
    std::vector<double> phi_;   // transition coefficients, padded to m
    std::vector<double> rvec_;  // innovation loadings (1, theta_1, ...), padded to m

    std::vector<double> apply_t(const std::vector<double>& x) const;
};

// Gaussian log-likelihood of the differenced, mean-adjusted series under the
// given coefficients, sigma2 taken from the coefficient set.
double exact_loglik(const ModelSpec& spec, const CoefficientSet& coef,
                    const std::vector<double>& w);

// Conditional sum of squared one-step innovations with pre-sample values and
// innovations fixed at zero.
double css_objective(const ModelSpec& spec, const CoefficientSet& coef,
                     const std::vector<double>& w);

}  // namespace sarima
