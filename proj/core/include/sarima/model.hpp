#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sarima/time_series.hpp"
#include "sarima/transform.hpp"

namespace sarima {

// Orders of a multiplicative seasonal model (p,d,q)x(P,D,Q)_s.
struct ModelSpec {
    int p = 0, d = 0, q = 0;
    int P = 0, D = 0, Q = 0;
    int s = 12;

    int n_coef() const { return p + q + P + Q; }

    // Throws ArgumentError on negative orders or a seasonal part with s < 2.
    // The all-zero spec is allowed; it denotes white noise.
    void validate() const;

    // "(2,1,0)(0,0,2)[12]"
    std::string str() const;

    bool operator==(const ModelSpec& o) const;
    bool operator<(const ModelSpec& o) const;  // lexicographic on (p,d,q,P,D,Q,s)
};

// Coefficient values for a given spec.  Signs follow the convention
//   AR: (1 - ar_1 B - ...),  MA: (1 + ma_1 B + ...)
// and likewise for the seasonal factors in B^s.
struct CoefficientSet {
    std::vector<double> ar;   // phi, length p
    std::vector<double> ma;   // theta, length q
    std::vector<double> sar;  // seasonal phi, length P
    std::vector<double> sma;  // seasonal theta, length Q
    double sigma2 = 1.0;

    // Flat view in the order ar, ma, sar, sma.
    std::vector<double> flat() const;
    static CoefficientSet from_flat(const ModelSpec& spec, const std::vector<double>& v,
                                    double sigma2 = 1.0);

    // Role-tagged names aligned with flat(): ar1, ar2, ma1, sar1, sma1, ...
    static std::vector<std::string> names(const ModelSpec& spec);
};

// Multiplied-out (nonseasonal x seasonal) lag polynomials:
//   AR(B) = 1 - sum ar[i] B^{i+1},  MA(B) = 1 + sum ma[i] B^{i+1}.
struct ExpandedPolynomials {
    std::vector<double> ar;  // length p + P*s
    std::vector<double> ma;  // length q + Q*s
};

// Expands the seasonal factors into single polynomials.  Throws
// ArgumentError when coefficient lengths disagree with the spec.
ExpandedPolynomials expand_polynomials(const ModelSpec& spec, const CoefficientSet& coef);

// Durbin-Levinson maps between AR coefficients (of a stationary polynomial
// 1 - sum a_i B^i) and partial autocorrelations.  pacf_to_ar requires every
// |r_k| < 1; ar_to_pacf throws NumericError when the polynomial is not
// stationary.
std::vector<double> pacf_to_ar(const std::vector<double>& pacf);
std::vector<double> ar_to_pacf(const std::vector<double>& ar);

// All roots of 1 - sum a_i B^i outside the closed unit disc, by the partial
// autocorrelation criterion with margin 1e-8.
bool stationary(const std::vector<double>& ar);

struct CoefficientValidity {
    bool ok = true;
    std::string reason;  // empty when ok
};

// Checks each factor: AR factors for stationarity, MA factors (via the
// dual polynomial) for invertibility, sigma2 > 0.
CoefficientValidity check_coefficients(const ModelSpec& spec, const CoefficientSet& coef);

// A completed estimation run.  Standard errors are absent when the observed
// information matrix was singular at the optimum.
struct FittedModel {
    ModelSpec spec;
    CoefficientSet coef;
    std::optional<std::vector<double>> std_errors;  // aligned with coef.flat()
    std::vector<double> z_values;                   // empty when SEs unavailable
    std::vector<double> p_values;                   // two-sided normal
    double loglik = 0.0;
    double aic = 0.0;
    double mean = 0.0;  // fitted level when d + D == 0, else 0
    // One-step prediction errors aligned with the training series: the first
    // d + D*s entries (consumed by differencing) are zero.
    std::vector<double> residuals;
    TransformRecord transform;
    TimeSeries train;  // original-scale training series, kept for forecasting

    int n_diff() const;  // observations consumed by differencing
    // Residuals without the differencing padding.
    std::vector<double> innovations() const;
};

}  // namespace sarima
