#include "isq/grids.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace isq {

QuadratureResult time_quadrature(const std::function<double(double)> &g, double t0,
                                 double rel_tol) {
  if (!(t0 > 0.0)) throw ParameterError("time_quadrature needs a positive scale hint");
  constexpr double half_pi = 0.5 * std::numbers::pi;
  // |pi/2 sinh tau| <= 690 keeps t inside the double range for t0 near 1
  const double tau_max = std::asinh(690.0 / half_pi);
  QuadratureResult res;

  auto term = [&](double tau) {
    double e = half_pi * std::sinh(tau);
    double t = t0 * std::exp(e);
    if (!(t > 0.0) || !std::isfinite(t)) return 0.0;
    double v = g(t);
    ++res.evaluations;
    return v * t * half_pi * std::cosh(tau);
  };

  double h = 0.5;
  int steps = static_cast<int>(std::ceil(tau_max / h));
  h = tau_max / steps;
  // level 0: full grid at step h
  double sum = term(0.0);
  double edge = 0.0;
  for (int i = 1; i <= steps; ++i) {
    double a = term(i * h), b = term(-i * h);
    sum += a + b;
    if (i == steps) edge = std::abs(a) + std::abs(b);
  }
  double prev = h * sum;
  for (int level = 1; level <= 10; ++level) {
    h *= 0.5;
    steps *= 2;
    double add = 0.0;
    for (int i = 1; i < steps; i += 2) add += term(i * h) + term(-i * h);
    sum += add;
    double cur = h * sum;
    res.value = cur;
    res.error = std::abs(cur - prev);
    if (level >= 3 && res.error <= rel_tol * std::abs(cur)) break;
    if (level >= 3 && cur == 0.0 && prev == 0.0) break;
    prev = cur;
  }
  // endpoint contribution relative to the value
  res.diverges = !std::isfinite(res.value) ||
                 (edge * h > 1e-6 * std::abs(res.value) && edge > 0.0) ||
                 res.error > 1e-3 * std::abs(res.value);
  return res;
}

} // namespace isq
