#include "isq/specfun.hpp"

#include "isq/grids.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace isq {

namespace {

constexpr double k_inf = std::numeric_limits<double>::infinity();
constexpr int k_debye_terms = 14;
constexpr double k_debye_min_nu = 20.0;

// Coefficients (in powers of p) of the Debye polynomials u_0..u_{K-1}.
std::vector<std::vector<double>> build_debye() {
  std::vector<std::vector<double>> u(k_debye_terms);
  u[0] = {1.0};
  for (int k = 0; k + 1 < k_debye_terms; ++k) {
    const auto &a = u[k];
    std::vector<double> next(a.size() + 3, 0.0);
    // 1/2 p^2 (1 - p^2) u_k'(p)
    for (std::size_t j = 1; j < a.size(); ++j) {
      double c = 0.5 * j * a[j]; // p^{j-1} * p^2 -> p^{j+1}
      next[j + 1] += c;
      next[j + 3] -= c;
    }
    // 1/8 int_0^p (1 - 5 s^2) u_k(s) ds
    for (std::size_t j = 0; j < a.size(); ++j) {
      next[j + 1] += a[j] / (8.0 * (j + 1));
      next[j + 3] -= 5.0 * a[j] / (8.0 * (j + 3));
    }
    u[k + 1] = std::move(next);
  }
  return u;
}

double log_i_debye(double nu, double x) {
  static const auto coeff = build_debye();
  const double z = x / nu;
  const double s = std::sqrt(1.0 + z * z);
  const double p = 1.0 / s;
  const double eta = s + std::log(z / (1.0 + s));
  double sum = 0.0, nu_pow = 1.0;
  for (int k = 0; k < k_debye_terms; ++k) {
    const auto &c = coeff[k];
    double v = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * p + c[j];
    double term = v / nu_pow;
    sum += term;
    if (k > 2 && std::abs(term) < 1e-17 * std::abs(sum)) break;
    nu_pow *= nu;
  }
  return nu * eta - 0.5 * std::log(2.0 * std::numbers::pi * nu) - 0.25 * std::log1p(z * z) +
         std::log(sum);
}

// log of e^{-x} I_nu(x) by the large-argument expansion
double log_scaled_i_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0, prev = k_inf;
  for (int k = 1; k < 200; ++k) {
    double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
    double next = -term * f;
    if (std::abs(next) > prev) break; // asymptotic series: stop at smallest term
    prev = std::abs(next);
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::log(sum) - 0.5 * std::log(2.0 * std::numbers::pi * x);
}

// log I_nu(x) by the power series summed outward from its largest term
double log_i_series(double nu, double x) {
  const double q = 0.25 * x * x;
  double kpeak = std::floor(0.5 * (std::sqrt(nu * nu + x * x) - nu));
  if (kpeak < 0) kpeak = 0;
  const double half_x = 0.5 * x;
  const double log_peak = (2.0 * kpeak + nu) * std::log(half_x) - std::lgamma(kpeak + 1.0) -
                          std::lgamma(kpeak + nu + 1.0);
  double sum = 1.0;
  double t = 1.0;
  for (double k = kpeak; k < kpeak + 100000; k += 1.0) {
    t *= q / ((k + 1.0) * (k + 1.0 + nu));
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  t = 1.0;
  for (double k = kpeak; k >= 1.0; k -= 1.0) {
    t *= k * (k + nu) / q;
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  return log_peak + std::log(sum);
}

} // namespace

double ScaledBessel::log_value() const {
  if (mantissa <= 0.0) return -k_inf;
  return std::log(mantissa) + exponent;
}

double log_bessel_i(double nu, double x) {
  if (!(nu >= 0.0) || !(x >= 0.0) || !std::isfinite(nu))
    throw ParameterError("bessel_i needs nu >= 0 and x >= 0");
  if (std::isinf(x)) return k_inf;
  if (x == 0.0) return nu == 0.0 ? 0.0 : -k_inf;
  if (nu >= k_debye_min_nu) return log_i_debye(nu, x);
  if (x > std::max(20.0, nu * nu)) return x + log_scaled_i_hankel(nu, x);
  return log_i_series(nu, x);
}

ScaledBessel bessel_i(double nu, double x) {
  const double l = log_bessel_i(nu, x);
  ScaledBessel b;
  if (std::isinf(l) && l < 0) return b;
  if (l - x > -700.0) {
    b.mantissa = std::exp(l - x);
    b.exponent = x;
  } else {
    b.mantissa = 1.0;
    b.exponent = l;
  }
  return b;
}

double bessel_i_scaled(double nu, double x) {
  const double l = log_bessel_i(nu, x);
  return std::exp(l - x);
}

double bessel_j(double nu, double x) {
  if (!(x >= 0.0) || !(nu >= 0.0)) throw ParameterError("bessel_j needs nu >= 0 and x >= 0");
  return boost::math::cyl_bessel_j(nu, x);
}

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw ParameterError("Gamma evaluated at a pole");
  return std::tgamma(x);
}

double lgamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw ParameterError("log-Gamma evaluated at a pole");
  return std::lgamma(x);
}

double gegenbauer(int n, double lambda, double t) {
  if (n < 0) throw ParameterError("Gegenbauer degree must be >= 0");
  if (!(std::abs(t) <= 1.0)) throw ParameterError("Gegenbauer argument must lie in [-1, 1]");
  double c0 = 1.0;
  if (n == 0) return c0;
  double c1 = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    double c2 = (2.0 * t * (k + lambda - 1.0) * c1 - (k + 2.0 * lambda - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double zonal_harmonic(int l, int d, double cos_theta) {
  if (d < 3) throw ParameterError("zonal harmonics implemented for d >= 3");
  const double lambda = 0.5 * (d - 2);
  return (2.0 * l + d - 2.0) / (d - 2.0) * gegenbauer(l, lambda, cos_theta) / sphere_area(d);
}

} // namespace isq
