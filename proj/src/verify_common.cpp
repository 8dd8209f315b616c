#include "isq/verify.hpp"

#include <cmath>
#include <limits>

namespace isq {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::diverges_as_designed:
    return "diverges-as-designed";
  }
  return "fail";
}

double VerificationReport::fit(const std::string &k) const {
  for (const auto &[name, v] : fitted)
    if (name == k) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

RadialGrid make_grid(const GridSpec &gs, int d) { return make_log_grid(gs.r_min, gs.r_max, gs.n, d); }

std::pair<double, double> fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("fit_line needs >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw ParameterError("fit_line needs distinct abscissae");
  const double slope = (n * sxy - sx * sy) / den;
  return {slope, (sy - slope * sx) / n};
}

double bump(double r) {
  if (std::abs(r) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - r * r));
}

double radial_cutoff(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  // smooth transition from the standard glueing function
  auto e = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
  const double x = 2.0 * r - 1.0; // 0..1
  return e(1.0 - x) / (e(1.0 - x) + e(x));
}

double adapted_profile(const OperatorParams &op, double r) {
  return std::pow(r, -op.sigma()) * std::exp(-r * r / 8.0);
}

} // namespace isq
