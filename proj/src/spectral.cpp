#include "isq/spectral.hpp"

#include "isq/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace isq {

namespace {

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x) {
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double heat_derivative(double t, double k, int j) {
  double st = std::sqrt(t);
  double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(st, j) * hermite(j, st * k) * std::exp(-t * k * k);
}

// Coefficients of the order-7 smoothstep S(x) = x^8 sum_k C(7+k,k) C(15,7-k) (-x)^k.
const std::array<double, 16> &smoothstep_coefficients() {
  static const std::array<double, 16> c = [] {
    std::array<double, 16> out{};
    const int n = 7;
    auto binom = [](int a, int b) {
      double r = 1.0;
      for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
      return r;
    };
    for (int k = 0; k <= n; ++k)
      out[n + 1 + k] = binom(n + k, k) * binom(2 * n + 1, n - k) * ((k % 2) ? -1.0 : 1.0);
    return out;
  }();
  return c;
}

double smoothstep_derivative(double x, int order) {
  const auto &c = smoothstep_coefficients();
  double v = 0.0;
  for (int j = 15; j >= order; --j) {
    double f = c[j];
    for (int i = 0; i < order; ++i) f *= (j - i);
    v = v * x + f;
  }
  return v;
}

// Reference-element stiffness (D^T W D) for the GLL rule.
std::vector<double> reference_stiffness(int p) {
  const auto &rule = gll_rule(p);
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
  std::vector<double> K((p + 1) * (p + 1), 0.0);
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= p; ++b) {
      double s = 0.0;
      for (int q = 0; q <= p; ++q) s += D[q * (p + 1) + a] * rule.w[q] * D[q * (p + 1) + b];
      K[a * (p + 1) + b] = s;
    }
  return K;
}

double relative_l2(const RadialGrid &g, std::span<const double> a, std::span<const double> b) {
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  double nb = lp_norm(g, b, 2.0);
  return nb > 0 ? lp_norm(g, diff, 2.0) / nb : lp_norm(g, diff, 2.0);
}

} // namespace

Multiplier identity_symbol() {
  Multiplier m;
  m.symbol = [](double) { return 1.0; };
  m.derivative = [](double, int j) { return j == 0 ? 1.0 : 0.0; };
  m.max_analytic_order = 1000;
  return m;
}

Multiplier heat_symbol(double t) {
  Multiplier m;
  m.symbol = [t](double k) { return std::exp(-t * k * k); };
  m.derivative = [t](double k, int j) { return heat_derivative(t, k, j); };
  m.max_analytic_order = 1000;
  return m;
}

Multiplier gaussian_symbol() { return heat_symbol(1.0); }

Multiplier power_symbol(double s) {
  Multiplier m;
  m.symbol = [s](double k) { return std::pow(k, s); };
  m.derivative = [s](double k, int j) {
    double c = 1.0;
    for (int i = 0; i < j; ++i) c *= (s - i);
    return c * std::pow(k, s - j);
  };
  m.max_analytic_order = 1000;
  return m;
}

double smooth_phi(double x) {
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  return 1.0 - smoothstep_derivative(x - 1.0, 0);
}

double smooth_phi_derivative(double x, int order) {
  if (order == 0) return smooth_phi(x);
  if (x <= 1.0 || x >= 2.0) return 0.0;
  return -smoothstep_derivative(x - 1.0, order);
}

Multiplier smooth_phi_symbol(double N) {
  Multiplier m;
  m.symbol = [N](double k) { return smooth_phi(k / N); };
  m.derivative = [N](double k, int j) { return std::pow(N, -j) * smooth_phi_derivative(k / N, j); };
  m.max_analytic_order = 15;
  return m;
}

Multiplier smooth_psi_symbol(double N) {
  Multiplier m;
  m.symbol = [N](double k) { return smooth_phi(k / N) - smooth_phi(2.0 * k / N); };
  m.derivative = [N](double k, int j) {
    return std::pow(N, -j) * smooth_phi_derivative(k / N, j) -
           std::pow(2.0 / N, j) * smooth_phi_derivative(2.0 * k / N, j);
  };
  m.max_analytic_order = 15;
  return m;
}

Multiplier heat_lp_symbol(double N) {
  const double t1 = 1.0 / (N * N), t2 = 4.0 / (N * N);
  Multiplier m;
  m.symbol = [t1, t2](double k) { return std::exp(-t1 * k * k) - std::exp(-t2 * k * k); };
  m.derivative = [t1, t2](double k, int j) {
    return heat_derivative(t1, k, j) - heat_derivative(t2, k, j);
  };
  m.max_analytic_order = 1000;
  return m;
}

HankelPlan::HankelPlan(const OperatorParams &op, int ell, const RadialGrid &grid)
    : op_(op), ell_(ell), nu_(op.nu(ell)), grid_(grid) {
  const int p = grid.order;
  const std::size_t n = grid.size();
  const double h = grid.element_width();
  const auto Kref = reference_stiffness(p);

  const bool dirichlet_right = nu_ < 1e-12;
  active_ = dirichlet_right ? n - 1 : n;

  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(active_, active_);
  for (int e = 0; e < grid.elements; ++e) {
    std::size_t base = static_cast<std::size_t>(e) * p;
    for (int a = 0; a <= p; ++a) {
      std::size_t ia = base + a;
      if (ia >= active_) continue;
      for (int b = 0; b <= p; ++b) {
        std::size_t ib = base + b;
        if (ib >= active_) continue;
        S(ia, ib) += Kref[a * (p + 1) + b] * 2.0 / h;
      }
    }
  }
  for (std::size_t i = 0; i < active_; ++i) S(i, i) += nu_ * nu_ * grid.w_u[i];
  // Robin ends: h_u = nu h on the left (Friedrichs branch), h_u = -nu h on the right.
  S(0, 0) += nu_;
  if (!dirichlet_right) S(n - 1, n - 1) += nu_;

  std::vector<double> inv_sqrt_m(active_);
  to_y_.assign(n, 0.0);
  const double lam = op.lambda();
  for (std::size_t i = 0; i < n; ++i) {
    double m = grid.w_u[i] * grid.r[i] * grid.r[i];
    to_y_[i] = std::sqrt(m) * std::pow(grid.r[i], lam);
    if (i < active_) inv_sqrt_m[i] = 1.0 / std::sqrt(m);
  }
  for (std::size_t j = 0; j < active_; ++j)
    for (std::size_t i = j; i < active_; ++i) S(i, j) *= inv_sqrt_m[i] * inv_sqrt_m[j];

  // Tridiagonal QR on the lower triangle; divide-and-conquer drivers lose the
  // bottom of this very wide spectrum.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed in plan construction");
  q_ = es.eigenvectors();
  k_.resize(active_);
  for (std::size_t j = 0; j < active_; ++j) k_[j] = std::sqrt(std::max(es.eigenvalues()[j], 0.0));

  // e^{-L}[r^{nu-lam} e^{-r^2/4}] = 2^{-(nu+1)} r^{nu-lam} e^{-r^2/8} in this sector.
  std::vector<double> f0(n), expect(n);
  for (std::size_t i = 0; i < n; ++i) {
    double r = grid.r[i];
    double base = std::pow(r, nu_ - lam);
    f0[i] = base * std::exp(-r * r / 4.0);
    expect[i] = std::pow(0.5, nu_ + 1.0) * base * std::exp(-r * r / 8.0);
  }
  auto got = apply([](double k) { return std::exp(-k * k); }, f0);
  calibration_error_ = relative_l2(grid, got, expect);
  if (!(calibration_error_ < 1e-6))
    throw std::runtime_error("plan calibration failed: closed-form heat check error " +
                             std::to_string(calibration_error_));
}

std::vector<double> HankelPlan::forward(std::span<const double> f) const {
  if (f.size() != grid_.size()) throw ParameterError("function length differs from grid length");
  Eigen::VectorXd y(active_);
  for (std::size_t i = 0; i < active_; ++i) y[i] = to_y_[i] * f[i];
  Eigen::VectorXd c = q_.transpose() * y;
  return std::vector<double>(c.data(), c.data() + c.size());
}

std::vector<double> HankelPlan::inverse(std::span<const double> c) const {
  if (c.size() != active_) throw ParameterError("coefficient length differs from plan size");
  Eigen::Map<const Eigen::VectorXd> cv(c.data(), static_cast<Eigen::Index>(c.size()));
  Eigen::VectorXd y = q_ * cv;
  std::vector<double> f(grid_.size(), 0.0);
  for (std::size_t i = 0; i < active_; ++i) f[i] = y[i] / to_y_[i];
  return f;
}

std::vector<double> HankelPlan::apply_coefficients(const std::function<double(double)> &m,
                                                   std::span<const double> c) const {
  std::vector<double> mc(c.begin(), c.end());
  for (std::size_t j = 0; j < mc.size(); ++j) mc[j] *= m(k_[j]);
  return inverse(mc);
}

std::vector<double> HankelPlan::apply(const std::function<double(double)> &m,
                                      std::span<const double> f) const {
  return apply_coefficients(m, forward(f));
}

std::shared_ptr<const HankelPlan> cached_plan(const OperatorParams &op, int ell,
                                              const RadialGrid &grid) {
  using Key = std::tuple<int, double, int, double, double, std::size_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_future<std::shared_ptr<const HankelPlan>>> cache;
  Key key{op.d, op.a, ell, grid.r_min, grid.r_max, grid.size()};
  std::promise<std::shared_ptr<const HankelPlan>> promise;
  std::shared_future<std::shared_ptr<const HankelPlan>> fut;
  bool builder = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
      fut = promise.get_future().share();
      cache.emplace(key, fut);
      builder = true;
    } else {
      fut = it->second;
    }
  }
  if (builder) {
    try {
      promise.set_value(std::make_shared<const HankelPlan>(op, ell, grid));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard<std::mutex> lock(mu);
      cache.erase(key);
    }
  }
  return fut.get();
}

double hankel_transform(const RadialGrid &grid, double nu, std::span<const double> f, double k) {
  if (f.size() != grid.size()) throw ParameterError("function length differs from grid length");
  if (!(k > 0.0)) throw ParameterError("Hankel transform needs k > 0");
  const double lam = 0.5 * (grid.d - 2);
  double s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double x = k * grid.r[i];
    s += grid.w[i] * f[i] * std::pow(x, -lam) * bessel_j(nu, x);
  }
  return s;
}

std::vector<double> apply_multiplier(const HankelPlan &plan, const Multiplier &m,
                                     std::span<const double> f) {
  return plan.apply(m.symbol, f);
}

FlaggedFunction frac_power(const HankelPlan &plan, double s, int sign, std::span<const double> f) {
  if (sign != 1 && sign != -1) throw ParameterError("frac_power sign must be +1 or -1");
  if (!(s >= 0.0)) throw ParameterError("frac_power needs s >= 0");
  const double e = sign * s;
  auto c = plan.forward(f);
  FlaggedFunction out;
  out.values = plan.apply_coefficients([e](double k) { return std::pow(k, e); }, c);
  if (sign < 0 && s > 0.0) {
    const double cut = 10.0 * plan.frequencies().front();
    auto trimmed = plan.apply_coefficients(
        [e, cut](double k) { return k < cut ? 0.0 : std::pow(k, e); }, c);
    out.diverges = relative_l2(plan.grid(), trimmed, out.values) > 0.1;
  }
  return out;
}

std::vector<double> lp_proj(const HankelPlan &plan, std::span<const double> f, double N,
                            LpKind kind) {
  const Multiplier m = kind == LpKind::smooth ? smooth_psi_symbol(N) : heat_lp_symbol(N);
  return apply_multiplier(plan, m, f);
}

std::vector<double> dyadic_range(int jmin, int jmax) {
  std::vector<double> out;
  for (int j = jmin; j <= jmax; ++j) out.push_back(std::ldexp(1.0, j));
  return out;
}

std::vector<double> square_function(const HankelPlan &plan, std::span<const double> f, double s,
                                    std::span<const double> Ns, LpKind kind) {
  auto c = plan.forward(f);
  std::vector<double> acc(f.size(), 0.0);
  for (double N : Ns) {
    const Multiplier m = kind == LpKind::smooth ? smooth_psi_symbol(N) : heat_lp_symbol(N);
    auto v = plan.apply_coefficients(m.symbol, c);
    const double w = std::pow(N, 2.0 * s);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += w * v[i] * v[i];
  }
  for (auto &v : acc) v = std::sqrt(v);
  return acc;
}

double identity_check(const HankelPlan &plan, std::span<const double> f,
                      std::span<const double> Ns, double p, LpKind kind) {
  auto c = plan.forward(f);
  std::vector<double> sum(f.size(), 0.0);
  for (double N : Ns) {
    const Multiplier m = kind == LpKind::smooth ? smooth_psi_symbol(N) : heat_lp_symbol(N);
    auto v = plan.apply_coefficients(m.symbol, c);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = f[i] - sum[i];
  return lp_norm(plan.grid(), sum, p);
}

} // namespace isq
