#include "isq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace isq {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// j-th central difference quotient with step h
double central_difference(const std::function<double(double)> &f, double x, int j, double h) {
  double s = 0.0;
  for (int k = 0; k <= j; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s += sign * binomial(j, k) * f(x + (0.5 * j - k) * h);
  }
  return s / std::pow(h, j);
}

} // namespace

int mikhlin_order(int d) { return 3 * (d / 4) + 3; }

MikhlinResult mikhlin_check(const Multiplier &m, int order, std::span<const double> lambda_grid,
                            std::span<const double> inner_grid, double bound) {
  if (order < 0) throw ParameterError("derivative order must be >= 0");
  MikhlinResult res;
  res.sup.assign(order + 1, 0.0);
  res.sup_inner.assign(order + 1, 0.0);
  res.unreliable.assign(order + 1, false);
  for (int j = 0; j <= order; ++j) {
    const bool analytic = m.derivative && j <= m.max_analytic_order;
    auto eval = [&](double lam, bool &bad) {
      if (analytic) return m.derivative(lam, j);
      if (j == 0) return m.symbol(lam);
      // Richardson on the second-order central difference
      const double h = 0.05 * lam / std::max(1, j);
      const double d1 = central_difference(m.symbol, lam, j, h);
      const double d2 = central_difference(m.symbol, lam, j, 0.5 * h);
      const double r = (4.0 * d2 - d1) / 3.0;
      if (std::abs(d2 - d1) > 1e-3 * std::abs(r) + 1e-6 * std::pow(lam, -j)) bad = true;
      return r;
    };
    bool bad = false;
    for (double lam : lambda_grid)
      res.sup[j] = std::max(res.sup[j], std::pow(lam, j) * std::abs(eval(lam, bad)));
    for (double lam : inner_grid)
      res.sup_inner[j] = std::max(res.sup_inner[j], std::pow(lam, j) * std::abs(eval(lam, bad)));
    res.unreliable[j] = bad;
  }
  res.pass = true;
  for (int j = 0; j <= order; ++j) {
    const double s = res.sup[j], si = res.sup_inner[j];
    if (!std::isfinite(s) || s > bound || s > 2.0 * si + 1e-300 || res.unreliable[j]) res.pass = false;
  }
  return res;
}

VerificationReport verify_mikhlin(const std::string &name, const Multiplier &m, int d) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "mikhlin";
  rep.notes.push_back("symbol: " + name);
  rep.set_param("d", d);
  const int order = mikhlin_order(d);
  rep.set_param("order", order);
  auto outer = geometric_points(1e-3, 1e3, 1201);
  auto inner = geometric_points(1e-2, 1e2, 801);
  auto res = mikhlin_check(m, order, outer, inner);
  double mx = 0.0;
  for (int j = 0; j <= order; ++j) {
    rep.set_fit("sup_j" + std::to_string(j), res.sup[j]);
    if (res.unreliable[j]) rep.notes.push_back("unreliable derivative at j=" + std::to_string(j));
    mx = std::max(mx, res.sup[j]);
  }
  rep.observed_max = mx;
  rep.verdict = res.pass ? Verdict::pass : Verdict::fail;
  rep.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport multiplier_ratio_check(const HankelPlan &plan, const std::string &name,
                                          const Multiplier &m, double p,
                                          std::span<const double> dilations) {
  auto t0 = std::chrono::steady_clock::now();
  const auto &op = plan.params();
  VerificationReport rep;
  rep.check = "multiplier-ratio";
  rep.notes.push_back("symbol: " + name);
  rep.set_param("d", op.d);
  rep.set_param("a", op.a);
  rep.set_param("p", p);
  const bool in_window = p > op.r0() && p < op.r0_prime();
  if (!in_window) throw ParameterError("p outside (r0, r0')");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  const auto &g = plan.grid();
  for (double lam : dilations) {
    auto f = sample(g, [&](double r) { return adapted_profile(op, lam * r); });
    auto mf = apply_multiplier(plan, m, f);
    double ratio = lp_norm(g, mf, p) / lp_norm(g, f, p);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  rep.observed_min = lo;
  rep.observed_max = hi;
  rep.set_fit("max_ratio", hi);
  rep.verdict = (std::isfinite(hi) && hi <= 1e2) ? Verdict::pass : Verdict::fail;
  rep.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

} // namespace isq
