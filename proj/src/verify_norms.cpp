#include "isq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace isq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Composite GLL quadrature of fn over [a, b].
double integrate_line(const std::function<double(double)> &fn, double a, double b, int panels) {
  const auto &rule = gll_rule(k_gll_order);
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
      s += 0.5 * h * rule.w[i] * fn(lo + 0.5 * h * (rule.x[i] + 1.0));
  }
  return s;
}

double variation(const std::vector<double> &v) {
  auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  return *mx / *mn - 1.0;
}

std::vector<double> scaled_sample(const RadialGrid &g, const std::function<double(double)> &fn,
                                  double lam) {
  return sample(g, [&](double r) { return fn(lam * r); });
}

// Log-log slope of |f| over grid nodes with r in [lo, hi].
double profile_slope(const RadialGrid &g, std::span<const double> f, double lo, double hi) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.r[i] >= lo && g.r[i] <= hi && f[i] != 0.0) {
      x.push_back(std::log(g.r[i]));
      y.push_back(std::log(std::abs(f[i])));
    }
  return fit_line(x, y).first;
}

GrowthCurve annulus_growth(const RadialGrid &g, std::span<const double> v, double p,
                           std::span<const double> bounds, bool inner) {
  GrowthCurve gc;
  for (double b : bounds) {
    gc.eps.push_back(b);
    gc.norm.push_back(inner ? lp_norm_on(g, v, p, b, 1.0) : lp_norm_on(g, v, p, 1.0, b));
  }
  gc.growth = gc.norm.back() / gc.norm.front();
  gc.monotone = true;
  for (std::size_t i = 1; i < gc.norm.size(); ++i)
    if (gc.norm[i] < gc.norm[i - 1]) gc.monotone = false;
  return gc;
}

void attach_growth(VerificationReport &rep, const GrowthCurve &gc, const char *col) {
  rep.plot.kind = "growth-curve";
  rep.plot.columns = {col, "annulus_norm"};
  for (std::size_t i = 0; i < gc.eps.size(); ++i) rep.plot.rows.push_back({gc.eps[i], gc.norm[i]});
  rep.set_fit("growth", gc.growth);
  rep.set_fit("monotone", gc.monotone ? 1.0 : 0.0);
}

} // namespace

VerificationReport hardy_sweep(const HankelPlan &plan, double s, double p,
                               std::span<const double> family) {
  auto t0 = Clock::now();
  const auto &op = plan.params();
  const auto &g = plan.grid();
  const int d = op.d;
  const double sg = op.sigma();
  Interval win = hardy_window(op, s);
  if (!win.valid) throw ParameterError("Hardy sweep needs 0 < s < d and d - s - 2 sigma > 0");
  if (!(p > 1.0)) throw ParameterError("Hardy sweep needs p > 1");
  VerificationReport rep;
  rep.check = "hardy";
  rep.set_param("d", d);
  rep.set_param("a", op.a);
  rep.set_param("s", s);
  rep.set_param("p", p);
  rep.set_fit("window_lo", win.lo);
  rep.set_fit("window_hi", win.hi);
  const double ip = 1.0 / p;

  if (win.contains(ip)) {
    std::vector<double> ratios;
    bool flagged = false;
    for (double lam : family) {
      auto f = scaled_sample(g, bump, lam);
      auto lhs = weighted_lp_norm(g, f, p, s);
      auto rhs = frac_power(plan, s, +1, f);
      flagged = flagged || lhs.diverges;
      ratios.push_back(lhs.value / lp_norm(g, rhs.values, p));
    }
    rep.observed_min = *std::min_element(ratios.begin(), ratios.end());
    rep.observed_max = *std::max_element(ratios.begin(), ratios.end());
    rep.set_fit("C", rep.observed_max);
    rep.set_fit("dilation_variation", variation(ratios));
    rep.verdict = (!flagged && std::isfinite(rep.observed_max) && variation(ratios) < 0.05)
                      ? Verdict::pass
                      : Verdict::fail;
    rep.runtime = seconds_since(t0);
    return rep;
  }

  // Out of range: the two counterexamples built from f = L^{-s/2} phi.
  // (s + sigma) p >= d sits below the window in 1/p; compare against the centre to stay robust at
  // the edge
  const bool inner = ip < 0.5 * (win.lo + win.hi);
  std::vector<double> phi;
  if (inner) {
    const double R = 8.0; // radial shell away from the origin
    phi = sample(g, [R](double r) { return bump(2.0 * (r - R) - 1.0); });
  } else {
    phi = sample(g, bump);
  }
  auto f = frac_power(plan, s, -1, phi);
  std::vector<double> weighted(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) weighted[i] = f.values[i] * std::pow(g.r[i], -s);

  // three decades of cutoff
  std::vector<double> bounds;
  double expected;
  if (inner) {
    const double top = 1e3 * 10.0 * g.r_min;
    if (top >= 1.0) throw ParameterError("inner counterexample needs r_min <= 1e-5");
    bounds = geometric_points(top / 1e3, top, 7);
    std::reverse(bounds.begin(), bounds.end());
    expected = -sg;
    rep.set_fit("profile_slope", profile_slope(g, f.values, 10.0 * g.r_min, 1e-1));
  } else {
    const double bottom = 10.0;
    if (g.r_max < 1e4 * bottom / 10.0) throw ParameterError("outer counterexample needs r_max >= 1e4");
    bounds = geometric_points(bottom, bottom * 1e3, 7);
    expected = s + sg - d;
    rep.set_fit("profile_slope", profile_slope(g, f.values, 10.0, g.r_max / 10.0));
  }
  rep.slope = rep.fit("profile_slope");
  rep.has_slope = true;
  rep.set_fit("expected_slope", expected);
  auto gc = annulus_growth(g, weighted, p, bounds, inner);
  attach_growth(rep, gc, "ε");
  rep.notes.push_back(inner ? "counterexample: shell bump, inner annuli"
                            : "counterexample: origin bump, outer annuli");
  if (f.diverges) rep.notes.push_back("negative power flagged low-frequency sensitivity");
  rep.observed_min = gc.norm.front();
  rep.observed_max = gc.norm.back();
  const bool slope_ok = expected == 0.0 ? std::abs(rep.slope) <= 0.05
                                        : std::abs(rep.slope - expected) <= 0.1 * std::abs(expected);
  rep.set_fit("slope_ok", slope_ok ? 1.0 : 0.0);
  rep.verdict = (gc.growth >= 10.0 && gc.monotone && slope_ok) ? Verdict::diverges_as_designed
                                                                : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport classical_hardy_check(const HankelPlan &plan0, double s, double p) {
  auto t0 = Clock::now();
  const auto &g = plan0.grid();
  const int d = g.d;
  if (!(p > 1.0)) throw ParameterError("classical Hardy check needs 1 < p");
  if (plan0.params().a != 0.0) throw ParameterError("classical Hardy check needs the a = 0 plan");
  VerificationReport rep;
  rep.check = "hardy-classical";
  rep.set_param("d", d);
  rep.set_param("s", s);
  rep.set_param("p", p);
  auto gauss = [](double r) { return std::exp(-r * r / 2.0); };
  if (s >= static_cast<double>(d) / p) {
    auto w = weighted_lp_norm(g, sample(g, gauss), p, s);
    rep.observed_max = w.value;
    rep.set_fit("coarse", w.coarse);
    rep.verdict = w.diverges ? Verdict::diverges_as_designed : Verdict::fail;
    rep.runtime = seconds_since(t0);
    return rep;
  }
  std::vector<double> ratios;
  for (double lam : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    auto f = scaled_sample(g, gauss, lam);
    auto lhs = weighted_lp_norm(g, f, p, s);
    double rhs = s == 0.0 ? lp_norm(g, f, p) : lp_norm(g, frac_power(plan0, s, +1, f).values, p);
    ratios.push_back(lhs.value / rhs);
  }
  rep.observed_min = *std::min_element(ratios.begin(), ratios.end());
  rep.observed_max = *std::max_element(ratios.begin(), ratios.end());
  rep.set_fit("C", rep.observed_max);
  rep.set_fit("dilation_variation", variation(ratios));
  rep.verdict = variation(ratios) < 0.05 ? Verdict::pass : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport sharp_hardy_check(int d) {
  auto t0 = Clock::now();
  if (d < 3) throw ParameterError("d >= 3");
  const double lam = 0.5 * (d - 2);
  const double lam2 = lam * lam;
  VerificationReport rep;
  rep.check = "hardy-sharp";
  rep.set_param("d", d);

  // 50-member family r^k exp(-r^2/w^2), ratio computed in g = r^lambda f, u = log r
  auto grid = make_log_grid(1e-8, 1e4, 2048, d);
  double family_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 5; ++k)
    for (double w : geometric_points(0.05, 20.0, 10)) {
      auto gfun = sample(grid, [&](double r) {
        return std::pow(r, lam + k) * std::exp(-(r * r) / (w * w));
      });
      auto gu = derivative_u(grid, gfun);
      double num = 0.0, den = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double q = gu[i] - lam * gfun[i];
        num += grid.w_u[i] * q * q;
        den += grid.w_u[i] * gfun[i] * gfun[i];
      }
      family_min = std::min(family_min, num / den);
    }
  rep.set_fit("family_min", family_min);
  rep.set_fit("sharp_constant", lam2);

  // near-optimisers |x|^{-lambda + delta} inside, |x|^{-lambda - delta} outside
  rep.plot.kind = "growth-curve";
  rep.plot.columns = {"δ", "ratio"};
  double last = 0.0;
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (double delta : {0.4, 0.2, 0.1, 0.05, 0.025}) {
    const double U = 40.0 / delta;
    auto gq = [delta](double u) { return std::exp(-delta * std::abs(u)); };
    auto gd = [delta](double u) { return -delta * (u > 0 ? 1.0 : -1.0) * std::exp(-delta * std::abs(u)); };
    auto num = [&](double u) {
      double q = gd(u) - lam * gq(u);
      return q * q;
    };
    auto den = [&](double u) { return gq(u) * gq(u); };
    const int panels = 400;
    double n = integrate_line(num, -U, 0.0, panels) + integrate_line(num, 0.0, U, panels);
    double m = integrate_line(den, -U, 0.0, panels) + integrate_line(den, 0.0, U, panels);
    last = n / m;
    if (last > prev) decreasing = false;
    prev = last;
    rep.plot.rows.push_back({delta, last});
  }
  rep.set_fit("near_optimiser_ratio", last);
  rep.observed_min = family_min;
  rep.observed_max = last;
  const bool ok = family_min >= 0.99 * lam2 && last <= 1.05 * lam2 && decreasing;
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport equiv_sweep(const HankelPlan &plan_a, const HankelPlan &plan_0, double s,
                               double p, std::span<const double> dilations) {
  auto t0 = Clock::now();
  const auto &op = plan_a.params();
  const auto &g = plan_a.grid();
  if (plan_0.params().a != 0.0 || plan_0.params().d != op.d)
    throw ParameterError("equivalence sweep needs the a = 0 plan of the same dimension");
  Interval fw = equivalence_forward_window(op, s);
  Interval rv = equivalence_reverse_window(op, s);
  const double ip = 1.0 / p;
  if (!fw.contains(ip) && !rv.contains(ip))
    throw ParameterError("p lies outside both equivalence windows");
  VerificationReport rep;
  rep.check = "equiv";
  rep.set_param("d", op.d);
  rep.set_param("a", op.a);
  rep.set_param("s", s);
  rep.set_param("p", p);
  double worst = 0.0;
  double mn = std::numeric_limits<double>::infinity(), mx = 0.0;
  auto run = [&](bool forward) {
    std::vector<double> ratios;
    for (double lam : dilations) {
      // forward uses the profile adapted to L_a, reverse a Gaussian (smooth for -Delta)
      auto f = forward ? scaled_sample(g, [&](double r) { return adapted_profile(op, r); }, lam)
                       : scaled_sample(g, [](double r) { return std::exp(-r * r / 2.0); }, lam);
      double la = lp_norm(g, frac_power(plan_a, s, +1, f).values, p);
      double l0 = lp_norm(g, frac_power(plan_0, s, +1, f).values, p);
      ratios.push_back(forward ? l0 / la : la / l0);
    }
    double v = variation(ratios);
    rep.set_fit(forward ? "forward_max" : "reverse_max", *std::max_element(ratios.begin(), ratios.end()));
    rep.set_fit(forward ? "forward_variation" : "reverse_variation", v);
    worst = std::max(worst, v);
    mn = std::min(mn, *std::min_element(ratios.begin(), ratios.end()));
    mx = std::max(mx, *std::max_element(ratios.begin(), ratios.end()));
  };
  if (fw.contains(ip)) run(true);
  if (rv.contains(ip)) run(false);
  rep.observed_min = mn;
  rep.observed_max = mx;
  rep.verdict = (std::isfinite(mx) && worst < 0.05) ? Verdict::pass : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport endpoint_exclusion(int d, std::span<const double> cutoffs) {
  auto t0 = Clock::now();
  const double lam = 0.5 * (d - 2);
  const double omega = sphere_area(d);
  VerificationReport rep;
  rep.check = "equiv-endpoint";
  rep.set_param("d", d);
  rep.set_param("a", -lam * lam);
  rep.set_param("s", 1.0);
  rep.set_param("p", 2.0);
  // u = |x|^{-lambda} (log 1/|x|)^{-1/2} on [eps, e^{-1}], constant inside eps, cut off smoothly
  // on u = log r in [-1, -1/2]. Work with g = r^lambda u.
  auto cut = [](double u) { return radial_cutoff(1.5 + u); };
  std::vector<double> grad, form, mass;
  for (double eps : cutoffs) {
    const double v = std::log(1.0 / eps);
    auto gfun = [&](double u, double &gu) {
      if (u <= -v) {
        const double g = std::exp(lam * (u + v)) / std::sqrt(v);
        gu = lam * g;
        return g;
      }
      const double base = 1.0 / std::sqrt(-u);
      const double dbase = 0.5 * std::pow(-u, -1.5);
      if (u <= -1.0) {
        gu = dbase;
        return base;
      }
      const double h = 1e-6;
      const double c = cut(u);
      const double dc = (cut(u + h) - cut(u - h)) / (2.0 * h);
      gu = dbase * c + base * dc;
      return base * c;
    };
    auto grad_i = [&](double u) {
      double gu;
      double g = gfun(u, gu);
      return (gu - lam * g) * (gu - lam * g);
    };
    auto form_i = [&](double u) {
      double gu;
      gfun(u, gu);
      return gu * gu;
    };
    auto mass_i = [&](double u) {
      double gu;
      double g = gfun(u, gu);
      return g * g * std::exp(2.0 * u);
    };
    const double ui = -v - 60.0 / lam;
    const int pin = 200, pmid = std::max(200, static_cast<int>(40 * v)), pout = 100;
    auto total = [&](const std::function<double(double)> &fn) {
      return omega * (integrate_line(fn, ui, -v, pin) + integrate_line(fn, -v, -1.0, pmid) +
                      integrate_line(fn, -1.0, -0.5, pout));
    };
    grad.push_back(std::sqrt(total(grad_i)));
    form.push_back(std::sqrt(total(form_i)));
    mass.push_back(std::sqrt(total(mass_i)));
  }
  rep.plot.kind = "growth-curve";
  rep.plot.columns = {"ε", "gradient_norm", "form_norm", "l2_norm"};
  for (std::size_t i = 0; i < cutoffs.size(); ++i)
    rep.plot.rows.push_back({cutoffs[i], grad[i], form[i], mass[i]});
  const double growth = grad.back() / grad.front();
  const double form_var = *std::max_element(form.begin(), form.end()) /
                          *std::min_element(form.begin(), form.end());
  rep.set_fit("gradient_growth", growth);
  rep.set_fit("form_norm_max_over_min", form_var);
  rep.set_fit("form_norm_last", form.back());
  rep.observed_min = grad.front();
  rep.observed_max = grad.back();
  bool monotone = std::is_sorted(grad.begin(), grad.end());
  rep.verdict = (growth >= 10.0 && monotone && form_var < 2.0) ? Verdict::diverges_as_designed
                                                                : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport bernstein_fit(const HankelPlan &plan, double p, double q,
                                 std::span<const double> Ns) {
  auto t0 = Clock::now();
  const auto &op = plan.params();
  const auto &g = plan.grid();
  if (!(p <= q)) throw ParameterError("Bernstein fit needs p <= q");
  if (op.a < 0.0) {
    if (!bernstein_admissible(op, p, q)) throw ParameterError("(p, q) outside (r0, r0')");
  } else if (!(p > 1.0)) {
    throw ParameterError("Bernstein fit needs 1 < p <= q <= inf");
  }
  VerificationReport rep;
  rep.check = "bernstein";
  rep.set_param("d", op.d);
  rep.set_param("a", op.a);
  rep.set_param("p", p);
  rep.set_param("q", q);
  const double target = op.d / p - (std::isinf(q) ? 0.0 : op.d / q);
  std::vector<double> x, y;
  for (double N : Ns) {
    // scale-adapted member f(N x)
    auto f = scaled_sample(g, [&](double r) { return adapted_profile(op, r); }, N);
    auto pf = lp_proj(plan, f, N, LpKind::heat);
    x.push_back(std::log(N));
    y.push_back(std::log(lp_norm(g, pf, q) / lp_norm(g, f, p)));
  }
  auto [slope, icpt] = fit_line(x, y);
  rep.slope = slope;
  rep.has_slope = true;
  rep.set_fit("slope", slope);
  rep.set_fit("intercept", icpt);
  rep.set_fit("expected_slope", target);
  rep.plot.kind = "slope-fit";
  rep.plot.columns = {"N", "norm_ratio", "fitted_line"};
  for (std::size_t i = 0; i < x.size(); ++i)
    rep.plot.rows.push_back({std::exp(x[i]), std::exp(y[i]), std::exp(icpt + slope * x[i])});
  rep.observed_min = std::exp(*std::min_element(y.begin(), y.end()));
  rep.observed_max = std::exp(*std::max_element(y.begin(), y.end()));
  const double tol = target == 0.0 ? 0.05 : 0.1 * std::abs(target);
  rep.verdict = std::abs(slope - target) <= tol ? Verdict::pass : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport sqfn_diff_check(const HankelPlan &plan_a, const HankelPlan &plan_0, double s,
                                   double p, std::span<const double> Ns,
                                   std::span<const double> dilations) {
  auto t0 = Clock::now();
  const auto &op = plan_a.params();
  const auto &g = plan_a.grid();
  if (!(s > 0.0 && s < 2.0)) throw ParameterError("square-function difference needs 0 < s < 2");
  if (op.a < 0.0) {
    if (!sqfn_difference_range(op, s).contains(p)) throw ParameterError("p outside the admissible window");
  } else if (!(p > 1.0)) {
    throw ParameterError("square-function difference needs 1 < p");
  }
  VerificationReport rep;
  rep.check = "sqfn-diff";
  rep.set_param("d", op.d);
  rep.set_param("a", op.a);
  rep.set_param("s", s);
  rep.set_param("p", p);
  std::vector<double> ratios;
  bool flagged = false;
  for (double lam : dilations) {
    auto f = scaled_sample(g, [](double r) { return std::exp(-r * r / 2.0); }, lam);
    auto sa = square_function(plan_a, f, s, Ns, LpKind::heat);
    auto s0 = square_function(plan_0, f, s, Ns, LpKind::heat);
    for (std::size_t i = 0; i < sa.size(); ++i) sa[i] -= s0[i];
    auto rhs = weighted_lp_norm(g, f, p, s);
    flagged = flagged || rhs.diverges;
    ratios.push_back(lp_norm(g, sa, p) / rhs.value);
  }
  rep.observed_min = *std::min_element(ratios.begin(), ratios.end());
  rep.observed_max = *std::max_element(ratios.begin(), ratios.end());
  rep.set_fit("C", rep.observed_max);
  const double var = rep.observed_max == 0.0 ? 0.0 : variation(ratios);
  rep.set_fit("dilation_variation", var);
  rep.verdict = (!flagged && std::isfinite(rep.observed_max) && var < 0.01) ? Verdict::pass
                                                                              : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport identity_report(const HankelPlan &plan, double p, LpKind kind, int jmin,
                                   int jmax, double tol) {
  auto t0 = Clock::now();
  const auto &op = plan.params();
  const auto &g = plan.grid();
  if (op.a < 0.0 && !(p > op.r0() && p < op.r0_prime()))
    throw ParameterError("p outside (r0, r0')");
  VerificationReport rep;
  rep.check = "identity";
  rep.notes.push_back(kind == LpKind::heat ? "kind: heat" : "kind: smooth");
  rep.set_param("d", op.d);
  rep.set_param("a", op.a);
  rep.set_param("p", p);
  rep.set_param("jmin", jmin);
  rep.set_param("jmax", jmax);
  // band-limit the profile to k in [0.05, 0.5] so both telescoping tails are below tolerance
  auto f = plan.apply([](double k) { return smooth_phi(4.0 * k) - smooth_phi(20.0 * k); },
                      sample(g, [&](double r) { return adapted_profile(op, r); }));
  auto Ns = dyadic_range(jmin, jmax);
  double rel = identity_check(plan, f, Ns, p, kind) / lp_norm(g, f, p);
  rep.observed_max = rel;
  rep.set_fit("relative_residual", rel);
  rep.verdict = rel < tol ? Verdict::pass : Verdict::fail;
  rep.runtime = seconds_since(t0);
  return rep;
}

VerificationReport sharpness_demo(const HankelPlan &plan, double p, std::span<const double> eps) {
  auto t0 = Clock::now();
  const auto &op = plan.params();
  const auto &g = plan.grid();
  const double sg = op.sigma();
  VerificationReport rep;
  rep.check = "sharpness";
  rep.set_param("d", op.d);
  rep.set_param("a", op.a);
  rep.set_param("p", p);
  auto phi = sample(g, radial_cutoff);
  auto u = plan.apply([](double k) { return std::exp(-k * k); }, phi);
  const double lo = std::max(1e-4, 10.0 * g.r_min);
  const double slope = profile_slope(g, u, lo, 1e-1);
  rep.slope = slope;
  rep.has_slope = true;
  rep.set_fit("slope", slope);
  rep.set_fit("expected_slope", -sg);
  const bool slope_ok = sg == 0.0 ? std::abs(slope) < 0.01 : std::abs(slope + sg) <= 0.05 * sg;
  rep.set_fit("slope_ok", slope_ok ? 1.0 : 0.0);
  auto gc = annulus_growth(g, u, p, eps, true);
  attach_growth(rep, gc, "ε");
  rep.observed_min = gc.norm.front();
  rep.observed_max = gc.norm.back();
  const bool beyond = sg > 0.0 && p >= op.d / sg;
  if (beyond) {
    rep.verdict = (gc.growth >= 10.0 && gc.monotone && slope_ok) ? Verdict::diverges_as_designed
                                                                  : Verdict::fail;
  } else {
    // the annulus norms settle: last decade adds under 5%
    const std::size_t n = gc.norm.size();
    const bool settles = n >= 2 && gc.norm[n - 1] / gc.norm[n - 2] - 1.0 < 0.05;
    rep.verdict = (settles && slope_ok) ? Verdict::pass : Verdict::fail;
  }
  rep.runtime = seconds_since(t0);
  return rep;
}

} // namespace isq
