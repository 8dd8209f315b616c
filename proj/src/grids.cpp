#include "isq/grids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace isq {

namespace {

// Legendre P_n and P_n' at x.
void legendre(int n, double x, double &p, double &dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GllRule build_gll(int order) {
  GllRule rule;
  const int n = order;
  rule.x.resize(n + 1);
  rule.w.resize(n + 1);
  rule.x[0] = -1.0;
  rule.x[n] = 1.0;
  for (int i = 1; i < n; ++i) {
    // interior nodes are roots of P_n'; Newton on P_n' from Chebyshev guesses
    double x = -std::cos(std::numbers::pi * i / n);
    for (int it = 0; it < 100; ++it) {
      // P_n'' from the Legendre ODE: (1-x^2) P'' = 2x P' - n(n+1) P
      double p, dp;
      legendre(n, x, p, dp);
      double ddp = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
      double dx = dp / ddp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.x[i] = x;
  }
  for (int i = 0; i <= n; ++i) {
    double p, dp;
    if (i == 0 || i == n) {
      p = 1.0; // |P_n(+-1)| = 1
    } else {
      legendre(n, rule.x[i], p, dp);
    }
    rule.w[i] = 2.0 / (n * (n + 1.0) * p * p);
  }
  return rule;
}

} // namespace

const GllRule &gll_rule(int order) {
  static std::mutex mu;
  static std::map<int, GllRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gll(order)).first;
  return it->second;
}

double RadialGrid::element_width() const {
  return (std::log(r_max) - std::log(r_min)) / elements;
}

RadialGrid make_log_grid(double r_min, double r_max, int n, int d, int order) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
    throw ParameterError("radial grid needs 0 < r_min < r_max < inf");
  if (d < 3) throw ParameterError("dimension must be >= 3");
  if (order < 2) throw ParameterError("GLL order must be >= 2");
  if (n < 16 || n < 2 * order) throw ParameterError("grid needs n >= 16 and two elements");
  RadialGrid g;
  g.d = d;
  g.r_min = r_min;
  g.r_max = r_max;
  g.order = order;
  g.elements = (n + order - 1) / order;
  const auto &rule = gll_rule(order);
  const double u0 = std::log(r_min);
  const double h = (std::log(r_max) - u0) / g.elements;
  const std::size_t count = static_cast<std::size_t>(g.elements) * order + 1;
  g.u.assign(count, 0.0);
  g.w_u.assign(count, 0.0);
  for (int e = 0; e < g.elements; ++e) {
    double left = u0 + e * h;
    for (int j = 0; j <= order; ++j) {
      std::size_t idx = static_cast<std::size_t>(e) * order + j;
      g.u[idx] = left + 0.5 * h * (rule.x[j] + 1.0);
      g.w_u[idx] += 0.5 * h * rule.w[j];
    }
  }
  g.u.back() = std::log(r_max);
  g.r.resize(count);
  for (std::size_t i = 0; i < count; ++i) g.r[i] = std::exp(g.u[i]);
  g.r.front() = r_min;
  g.r.back() = r_max;
  g.w.resize(count);
  for (std::size_t i = 0; i < count; ++i) g.w[i] = g.w_u[i] * std::pow(g.r[i], d);
  return g;
}

std::vector<double> geometric_points(double a, double b, std::size_t count) {
  if (!(a > 0.0) || !(b >= a) || count == 0)
    throw ParameterError("geometric_points needs 0 < a <= b and count > 0");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = a;
    return out;
  }
  const double la = std::log(a), lb = std::log(b);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::exp(la + (lb - la) * static_cast<double>(i) / (count - 1));
  out.back() = b;
  return out;
}

double sphere_area(int d) {
  if (d < 1) throw ParameterError("dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

std::vector<double> sample(const RadialGrid &g, const std::function<double(double)> &fn) {
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = fn(g.r[i]);
  return out;
}

std::vector<double> indicator(const RadialGrid &g, double a, double b) {
  std::vector<double> out(g.size(), 0.0);
  auto same = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::abs(y); };
  for (std::size_t i = 0; i < g.size(); ++i) {
    double r = g.r[i];
    if (same(r, a) || same(r, b))
      out[i] = 0.5;
    else if (r > a && r < b)
      out[i] = 1.0;
  }
  return out;
}

double integrate_radial(const RadialGrid &g, std::span<const double> f) {
  if (f.size() != g.size()) throw ParameterError("function length differs from grid length");
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g.w[i] * f[i];
  return sphere_area(g.d) * s;
}

double lp_norm_on(const RadialGrid &g, std::span<const double> f, double p, double lo,
                  double hi) {
  if (f.size() != g.size()) throw ParameterError("function length differs from grid length");
  if (!(p > 0.0)) throw ParameterError("L^p norm needs p > 0");
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.r[i] >= lo && g.r[i] <= hi) m = std::max(m, std::abs(f[i]));
    return m;
  }
  // scale by the max to avoid overflow in |f|^p
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.r[i] >= lo && g.r[i] <= hi) m = std::max(m, std::abs(f[i]));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.r[i] >= lo && g.r[i] <= hi) s += g.w[i] * std::pow(std::abs(f[i]) / m, p);
  return m * std::pow(sphere_area(g.d) * s, 1.0 / p);
}

double lp_norm(const RadialGrid &g, std::span<const double> f, double p) {
  return lp_norm_on(g, f, p, 0.0, std::numeric_limits<double>::infinity());
}

double interpolate(const RadialGrid &g, std::span<const double> f, double r) {
  if (f.size() != g.size()) throw ParameterError("function length differs from grid length");
  if (!(r >= g.r_min * (1 - 1e-12)) || !(r <= g.r_max * (1 + 1e-12)))
    throw ParameterError("interpolation point outside the grid");
  const double h = g.element_width();
  const double u = std::log(r);
  int e = static_cast<int>(std::floor((u - std::log(g.r_min)) / h));
  e = std::clamp(e, 0, g.elements - 1);
  const auto &rule = gll_rule(g.order);
  const std::size_t base = static_cast<std::size_t>(e) * g.order;
  const double left = std::log(g.r_min) + e * h;
  const double x = 2.0 * (u - left) / h - 1.0;
  // barycentric form with weights computed on the fly
  double num = 0.0, den = 0.0;
  for (int j = 0; j <= g.order; ++j) {
    double dx = x - rule.x[j];
    if (std::abs(dx) < 1e-15) return f[base + j];
    double bw = 1.0;
    for (int k = 0; k <= g.order; ++k)
      if (k != j) bw /= (rule.x[j] - rule.x[k]);
    double t = bw / dx;
    num += t * f[base + j];
    den += t;
  }
  return num / den;
}

std::vector<double> derivative_u(const RadialGrid &g, std::span<const double> f) {
  if (f.size() != g.size()) throw ParameterError("function length differs from grid length");
  const auto &rule = gll_rule(g.order);
  const int p = g.order;
  // differentiation matrix on the reference element
  std::vector<double> bw(p + 1, 1.0);
  for (int j = 0; j <= p; ++j)
    for (int k = 0; k <= p; ++k)
      if (k != j) bw[j] /= (rule.x[j] - rule.x[k]);
  std::vector<double> D((p + 1) * (p + 1), 0.0);
  for (int i = 0; i <= p; ++i) {
    double diag = 0.0;
    for (int j = 0; j <= p; ++j) {
      if (i == j) continue;
      double v = (bw[j] / bw[i]) / (rule.x[i] - rule.x[j]);
      D[i * (p + 1) + j] = v;
      diag -= v;
    }
    D[i * (p + 1) + i] = diag;
  }
  const double scale = 2.0 / g.element_width();
  std::vector<double> out(g.size(), 0.0), hits(g.size(), 0.0);
  for (int e = 0; e < g.elements; ++e) {
    std::size_t base = static_cast<std::size_t>(e) * p;
    for (int i = 0; i <= p; ++i) {
      double s = 0.0;
      for (int j = 0; j <= p; ++j) s += D[i * (p + 1) + j] * f[base + j];
      out[base + i] += scale * s;
      hits[base + i] += 1.0;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) out[i] /= hits[i];
  return out;
}

CheckedValue weighted_lp_norm(const RadialGrid &g, std::span<const double> f, double p,
                              double s) {
  if (f.size() != g.size()) throw ParameterError("function length differs from grid length");
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = f[i] * std::pow(g.r[i], -s);
  CheckedValue cv;
  const double inf = std::numeric_limits<double>::infinity();
  cv.value = lp_norm_on(g, v, p, 0.0, inf);
  cv.coarse = lp_norm_on(g, v, p, 10.0 * g.r_min * (1.0 - 1e-12), inf);
  cv.diverges = !std::isfinite(cv.value) ||
                std::abs(cv.value - cv.coarse) > 0.1 * std::abs(cv.value);
  return cv;
}

} // namespace isq
