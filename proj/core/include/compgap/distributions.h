#pragma once

namespace compgap::dist {

// Regularized lower/upper incomplete gamma P(a, x), Q(a, x) for a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b) for a, b > 0, 0 <= x <= 1.
double beta_i(double a, double b, double x);

double chi_squared_cdf(double x, double nu);
double chi_squared_sf(double x, double nu);

// x such that P(chi2_nu > x) = alpha. Errors: InvalidAlpha, OutOfRange (nu < 1).
double chi_squared_critical(int nu, double alpha);

// Upper tail P(F_{d1,d2} > f).
double f_sf(double f, double d1, double d2);

}  // namespace compgap::dist
