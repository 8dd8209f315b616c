#include "isq/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isq {

namespace {
constexpr double k_inf = std::numeric_limits<double>::infinity();
}

double OperatorParams::sigma() const {
  double disc = std::max(0.0, (d - 2.0) * (d - 2.0) + 4.0 * a);
  return lambda() - 0.5 * std::sqrt(disc);
}

double OperatorParams::nu(int l) const {
  if (l < 0) throw ParameterError("angular momentum must be >= 0");
  return std::sqrt(std::max(0.0, lambda() * lambda() + a + l * (l + d - 2.0)));
}

double OperatorParams::r0() const { return d / (d - sigma()); }

double OperatorParams::r0_prime() const {
  double s = sigma();
  return s > 0.0 ? d / s : k_inf;
}

bool OperatorParams::at_endpoint() const { return a == endpoint(); }

OperatorParams make_params(int d, double a) {
  if (d < 3) throw ParameterError("dimension must be >= 3");
  if (!std::isfinite(a)) throw ParameterError("coupling must be finite");
  OperatorParams op;
  op.d = d;
  const double e = op.endpoint();
  if (a < e - 1e-12 * std::max(1.0, std::abs(e)))
    throw ParameterError("coupling below -((d-2)/2)^2: operator not bounded below");
  op.a = std::max(a, e);
  return op;
}

double parse_coupling(const std::string &text, int d) {
  if (text == "endpoint") return -0.25 * (d - 2.0) * (d - 2.0);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception &) {
    throw ParameterError("cannot parse coupling '" + text + "'");
  }
  if (pos != text.size()) throw ParameterError("cannot parse coupling '" + text + "'");
  return v;
}

SectorOrder sector_order(const OperatorParams &op, int ell) { return {ell, op.nu(ell)}; }

Interval hardy_window(const OperatorParams &op, double s) {
  const double sg = op.sigma();
  const int d = op.d;
  Interval iv;
  if (!(s > 0.0 && s < d && d - s - 2.0 * sg > 0.0)) {
    iv.valid = false;
    return iv;
  }
  iv.lo = std::max(0.0, (s + sg) / d);
  iv.hi = std::min(1.0, (d - sg) / d);
  return iv;
}

Interval equivalence_forward_window(const OperatorParams &op, double s) {
  if (!(s > 0.0 && s < 2.0)) throw ParameterError("equivalence windows need 0 < s < 2");
  const double sg = op.sigma();
  Interval iv;
  iv.lo = std::max(0.0, (s + sg) / op.d);
  iv.hi = std::min(1.0, (op.d - sg) / op.d);
  return iv;
}

Interval equivalence_reverse_window(const OperatorParams &op, double s) {
  if (!(s > 0.0 && s < 2.0)) throw ParameterError("equivalence windows need 0 < s < 2");
  const double sg = op.sigma();
  Interval iv;
  iv.lo = std::max(s / op.d, sg / op.d);
  iv.hi = std::min(1.0, (op.d - sg) / op.d);
  return iv;
}

PRange sqfn_difference_range(const OperatorParams &op, double s) {
  const double sg = op.sigma();
  PRange pr;
  if (op.a >= 0.0) {
    pr.lo = 1.0;
    pr.hi = k_inf;
  } else {
    pr.lo = std::max(1.0, op.d / (op.d + s - sg));
    pr.hi = op.d / sg;
  }
  return pr;
}

bool bernstein_admissible(const OperatorParams &op, double p, double q) {
  if (!(p <= q)) return false;
  if (op.a < 0.0) return p > op.r0() && q < op.r0_prime();
  return p > 1.0;
}

int smoothing_order(int d) { return d / 4 + 1; }

std::vector<double> liouville_apply(const RadialGrid &grid, std::span<const double> g,
                                    double nu) {
  if (grid.size() < 512) throw ParameterError("liouville_apply needs at least 512 nodes");
  if (g.size() != grid.size()) throw ParameterError("function length differs from grid length");
  auto gu = derivative_u(grid, g);
  auto guu = derivative_u(grid, gu);
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double r = grid.r[i];
    out[i] = (-guu[i] + gu[i] + (nu * nu - 0.25) * g[i]) / (r * r);
  }
  return out;
}

} // namespace isq
