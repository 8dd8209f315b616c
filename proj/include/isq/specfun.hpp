#pragma once

namespace isq {

// I_nu(x) = mantissa * exp(exponent). For moderate x the exponent is x,
// so mantissa is the exponentially scaled e^{-x} I_nu(x).
struct ScaledBessel {
  double mantissa = 0.0;
  double exponent = 0.0;
  double log_value() const;
};

ScaledBessel bessel_i(double nu, double x);

// e^{-x} I_nu(x); underflows to 0 rather than failing.
double bessel_i_scaled(double nu, double x);

// log I_nu(x); -inf when I_nu(x) = 0.
double log_bessel_i(double nu, double x);

double bessel_j(double nu, double x);

// Gamma with a ParameterError at the poles.
double gamma_fn(double x);
double lgamma_fn(double x);

// Gegenbauer C_n^lambda(t) by the three-term recurrence.
double gegenbauer(int n, double lambda, double t);

// Zonal kernel of degree l on S^{d-1}: sum over an orthonormal basis of
// spherical harmonics Y(w) Y(w') as a function of cos(angle).
double zonal_harmonic(int l, int d, double cos_theta);

} // namespace isq
