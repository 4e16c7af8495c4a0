#pragma once

namespace sarima {

double normal_pdf(double x);
// Phi(x) via erfc, accurate in both tails.
double normal_cdf(double x);
// 1 - Phi(x).
double normal_sf(double x);

// Inverse of normal_cdf on (0, 1).  Rational initial guess polished with one
// Newton step; |error| stays below 1e-9.  Throws ArgumentError outside (0,1).
double normal_quantile(double p);

// Upper tail of the chi-squared distribution with df > 0 degrees of freedom,
// i.e. the regularized upper incomplete gamma Q(df/2, x/2).  Series for
// x < df + 2, continued fraction otherwise.
double chi_sq_sf(double x, double df);

// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

}  // namespace sarima
