#pragma once

namespace latentfit {

/// Regularized lower incomplete gamma P(a, x), series/continued-fraction
/// evaluation, absolute error below 1e-12 over the ranges used here.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Upper tail P[X >= x] of the central chi-square with df degrees of freedom.
double chi_square_sf(double x, double df);

/// Standard normal CDF.
double normal_cdf(double x);

/// Two-sided normal p-value 2*(1 - Phi(|z|)), accurate in far tails.
double normal_two_sided_p(double z);

/// Upper tail P[X >= x] of the noncentral chi-square(df, lambda), evaluated
/// as a Poisson(lambda/2) mixture of central chi-square tails.
double noncentral_chi_square_sf(double x, double df, double lambda);

}  // namespace latentfit
