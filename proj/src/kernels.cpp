#include "isq/kernels.hpp"

#include "isq/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace isq {

namespace {

constexpr double k_neg_inf = -std::numeric_limits<double>::infinity();

int lmax_cap(int l_max) {
  if (l_max == k_auto_lmax) return k_lmax_cap;
  if (l_max < 0) throw ParameterError("L_max must be >= 0");
  return l_max;
}

void check_pair(const PointPair &pp) {
  if (!(pp.rx > 0.0) || !(pp.ry > 0.0) || !(std::abs(pp.cos_theta) <= 1.0))
    throw ParameterError("point pair needs positive radii and |cos| <= 1");
}

// log prefactor (2t)^{-1} (r r')^{-(d-2)/2} e^{-(r - r')^2 / 4t}
double log_prefactor(int d, double t, double r, double rp) {
  const double lam = 0.5 * (d - 2);
  return -std::log(2.0 * t) - lam * (std::log(r) + std::log(rp)) - (r - rp) * (r - rp) / (4.0 * t);
}

// Gegenbauer values C_l^lam(c) and C_l^lam(1) advanced one degree at a time.
struct GegenbauerWalk {
  double lam, c;
  double a0 = 1.0, a1 = 0.0; // at c
  double b0 = 1.0, b1 = 0.0; // at 1
  int l = 0;
  GegenbauerWalk(double lam_, double c_) : lam(lam_), c(c_) {}
  // values for degree l, then advances
  void next() {
    int k = l + 1;
    if (k == 1) {
      a1 = 2.0 * lam * c;
      b1 = 2.0 * lam;
      std::swap(a0, a1); // a0 now holds degree 1, a1 degree 0
      std::swap(b0, b1);
    } else {
      double a2 = (2.0 * c * (k + lam - 1.0) * a0 - (k + 2.0 * lam - 2.0) * a1) / k;
      double b2 = (2.0 * (k + lam - 1.0) * b0 - (k + 2.0 * lam - 2.0) * b1) / k;
      a1 = a0;
      a0 = a2;
      b1 = b0;
      b0 = b2;
    }
    l = k;
  }
  double at_c() const { return a0; }
  double at_one() const { return b0; }
};

struct SignedLog {
  double sign = 0.0;
  double log_abs = k_neg_inf;
};

SignedLog subtract(const SignedLog &x, const SignedLog &y) {
  SignedLog out;
  double ref = std::max(x.log_abs, y.log_abs);
  if (ref == k_neg_inf) return out;
  double v = x.sign * std::exp(x.log_abs - ref) - y.sign * std::exp(y.log_abs - ref);
  if (v == 0.0) return out;
  out.sign = v > 0 ? 1.0 : -1.0;
  out.log_abs = ref + std::log(std::abs(v));
  return out;
}

} // namespace

double PointPair::distance_sq() const {
  return std::max(0.0, rx * rx + ry * ry - 2.0 * rx * ry * cos_theta);
}
double PointPair::distance() const { return std::sqrt(distance_sq()); }

PointPair make_point_pair(double rx, double ry, double cos_theta) {
  PointPair pp{rx, ry, cos_theta};
  check_pair(pp);
  return pp;
}

double log_heat_sector(const OperatorParams &op, int ell, double t, double r, double rp) {
  if (!(t > 0.0) || !(r > 0.0) || !(rp > 0.0))
    throw ParameterError("heat_sector needs t, r, r' > 0");
  const double z = r * rp / (2.0 * t);
  return log_prefactor(op.d, t, r, rp) + log_bessel_i(op.nu(ell), z) - z;
}

double heat_sector(const OperatorParams &op, int ell, double t, double r, double rp) {
  return std::exp(log_heat_sector(op, ell, t, r, rp));
}

KernelValue heat_full(const OperatorParams &op, double t, const PointPair &pp, int l_max) {
  check_pair(pp);
  if (!(t > 0.0)) throw ParameterError("heat_full needs t > 0");
  const int cap = lmax_cap(l_max);
  const int d = op.d;
  const double lam = op.lambda();
  const double z = pp.rx * pp.ry / (2.0 * t);
  const double L0 = log_bessel_i(op.nu(0), z);

  KernelValue kv;
  GegenbauerWalk gw(lam, pp.cos_theta);
  double sum = 0.0, abs_sum = 0.0, bound = 0.0;
  bool converged = false;
  for (int l = 0; l <= cap; ++l) {
    if (l > 0) gw.next();
    const double nu = op.nu(l);
    const double ratio = l == 0 ? 1.0 : std::exp(log_bessel_i(nu, z) - L0);
    const double w = (2.0 * l + d - 2.0) / (d - 2.0);
    const double term = w * gw.at_c() * ratio;
    bound = w * gw.at_one() * ratio;
    sum += term;
    abs_sum += std::abs(term);
    kv.terms = l + 1;
    if (l >= 1 && bound < 1e-17 * abs_sum && nu * nu > z) {
      converged = true;
      break;
    }
  }
  kv.truncated = !converged && bound > 1e-8 * std::abs(sum);
  kv.resolved = sum > 1e-8 * abs_sum;
  if (sum <= 0.0) {
    kv.value = 0.0;
    kv.log_value = k_neg_inf;
    kv.resolved = false;
    return kv;
  }
  kv.log_value = log_prefactor(d, t, pp.rx, pp.ry) + (L0 - z) + std::log(sum) -
                 std::log(sphere_area(d));
  kv.value = std::exp(kv.log_value);
  return kv;
}

double log_euclidean_heat(int d, double t, double dist_sq) {
  return -0.5 * d * std::log(4.0 * std::numbers::pi * t) - dist_sq / (4.0 * t);
}

double euclidean_heat(int d, double t, double dist_sq) {
  return std::exp(log_euclidean_heat(d, t, dist_sq));
}

double log_heat_envelope(const OperatorParams &op, double t, const PointPair &pp,
                         const KernelEnvelope &env) {
  check_pair(pp);
  const double sg = op.sigma();
  const double st = std::sqrt(t);
  return std::log(env.C) + sg * std::log(std::max(1.0, st / pp.rx)) +
         sg * std::log(std::max(1.0, st / pp.ry)) - 0.5 * op.d * std::log(t) -
         pp.distance_sq() / (env.c * t);
}

double heat_envelope(const OperatorParams &op, double t, const PointPair &pp,
                     const KernelEnvelope &env) {
  return std::exp(log_heat_envelope(op, t, pp, env));
}

double classical_riesz(int d, double s, double dist) {
  return std::tgamma(0.5 * (d - s)) /
         (std::pow(2.0, s) * std::pow(std::numbers::pi, 0.5 * d) * std::tgamma(0.5 * s)) *
         std::pow(dist, s - d);
}

RieszValue riesz_kernel(const OperatorParams &op, double s, const PointPair &pp, int l_max) {
  check_pair(pp);
  const double sg = op.sigma();
  if (!(s > 0.0 && s < op.d && op.d - s - 2.0 * sg > 0.0))
    throw ParameterError("Riesz kernel needs 0 < s < d and d - s - 2 sigma > 0");
  const double dist2 = pp.distance_sq();
  if (!(dist2 > 0.0)) throw ParameterError("Riesz kernel is singular on the diagonal");
  const double inv_gamma = 1.0 / std::tgamma(0.5 * s);
  RieszValue rv;
  auto integrand = [&](double t) {
    const double z = pp.rx * pp.ry / (2.0 * t);
    // the zonal sum cannot resolve the kernel once z(1 - cos) is large; it is then
    // below e^{-20} of its near-diagonal size and contributes nothing here
    if (z * (1.0 - pp.cos_theta) > 20.0) return 0.0;
    auto kv = heat_full(op, t, pp, l_max);
    if (kv.truncated) rv.truncated = true;
    if (!kv.resolved) return 0.0;
    return inv_gamma * std::exp(kv.log_value + (0.5 * s - 1.0) * std::log(t));
  };
  auto q = time_quadrature(integrand, dist2, 1e-7);
  rv.value = q.value;
  rv.diverges = q.diverges;
  rv.evaluations = q.evaluations;
  return rv;
}

double riesz_envelope(const OperatorParams &op, double s, const PointPair &pp) {
  check_pair(pp);
  const double dist = pp.distance();
  const double m = std::min({pp.rx / dist, pp.ry / dist, 1.0});
  return std::pow(dist, s - op.d) * std::pow(m, -op.sigma());
}

KernelValue heat_difference(const OperatorParams &op, double t, const PointPair &pp, int l_max) {
  check_pair(pp);
  if (!(t > 0.0)) throw ParameterError("heat_difference needs t > 0");
  KernelValue kv;
  if (op.a == 0.0) {
    kv.log_value = k_neg_inf;
    return kv;
  }
  const int cap = lmax_cap(l_max);
  const int d = op.d;
  const double lam = op.lambda();
  const double z = pp.rx * pp.ry / (2.0 * t);
  const OperatorParams free = make_params(d, 0.0);
  const double ref = std::max(log_bessel_i(free.nu(0), z), log_bessel_i(op.nu(0), z));

  GegenbauerWalk gw(lam, pp.cos_theta);
  double sum = 0.0, abs_sum = 0.0, bound = 0.0;
  bool converged = false;
  for (int l = 0; l <= cap; ++l) {
    if (l > 0) gw.next();
    const double nu0 = free.nu(l), nua = op.nu(l);
    const double l0 = log_bessel_i(nu0, z), la = log_bessel_i(nua, z);
    const double e0 = std::exp(l0 - ref);
    const double diff = -e0 * std::expm1(la - l0);
    const double w = (2.0 * l + d - 2.0) / (d - 2.0);
    const double term = w * gw.at_c() * diff;
    bound = w * gw.at_one() * (e0 + std::exp(la - ref));
    sum += term;
    abs_sum += std::abs(term);
    kv.terms = l + 1;
    if (l >= 1 && bound < 1e-17 * abs_sum && std::min(nu0, nua) * std::min(nu0, nua) > z) {
      converged = true;
      break;
    }
  }
  kv.truncated = !converged && bound > 1e-8 * std::abs(sum);
  kv.resolved = std::abs(sum) > 1e-10 * abs_sum;
  if (sum == 0.0) {
    kv.log_value = k_neg_inf;
    return kv;
  }
  kv.log_value = log_prefactor(d, t, pp.rx, pp.ry) + (ref - z) + std::log(std::abs(sum)) -
                 std::log(sphere_area(d));
  kv.value = (sum > 0 ? 1.0 : -1.0) * std::exp(kv.log_value);
  return kv;
}

KernelValue kernel_diff(const OperatorParams &op, double N, const PointPair &pp, int l_max) {
  if (!(N > 0.0)) throw ParameterError("kernel_diff needs N > 0");
  auto k1 = heat_difference(op, 1.0 / (N * N), pp, l_max);
  auto k2 = heat_difference(op, 4.0 / (N * N), pp, l_max);
  KernelValue kv;
  kv.terms = std::max(k1.terms, k2.terms);
  kv.truncated = k1.truncated || k2.truncated;
  SignedLog a{k1.value > 0 ? 1.0 : (k1.value < 0 ? -1.0 : 0.0), k1.log_value};
  SignedLog b{k2.value > 0 ? 1.0 : (k2.value < 0 ? -1.0 : 0.0), k2.log_value};
  if (a.sign == 0.0) a.log_abs = k_neg_inf;
  if (b.sign == 0.0) b.log_abs = k_neg_inf;
  auto diff = subtract(a, b);
  kv.log_value = diff.log_abs;
  kv.value = diff.sign * std::exp(diff.log_abs);
  const double ref = std::max(a.log_abs, b.log_abs);
  kv.resolved = k1.resolved && k2.resolved &&
                (ref == k_neg_inf || diff.log_abs > ref + std::log(1e-10));
  return kv;
}

double diff_envelope(const OperatorParams &op, double N, const PointPair &pp,
                     const KernelEnvelope &env) {
  check_pair(pp);
  const int d = op.d;
  const double x = pp.rx, y = pp.ry;
  const double gauss = std::exp(-env.c * N * N * pp.distance_sq());
  if (env.shape == EnvelopeShape::diff_a_pos) {
    double m = std::max(1.0, N * (x + y));
    return env.C * std::pow(N, d) / (m * m) * gauss;
  }
  if (env.shape != EnvelopeShape::diff_a_neg)
    throw ParameterError("diff_envelope needs a kernel-difference shape");
  const double sg = op.sigma();
  const double inv = 1.0 / N;
  double best = std::numeric_limits<double>::infinity();
  if (x <= inv && y <= inv) best = std::min(best, std::pow(N, d - 2.0 * sg) * std::pow(x * y, -sg));
  if (2.0 * x <= inv && inv <= y)
    best = std::min(best, std::pow(N, d) * std::pow(N * x, -sg) * std::pow(N * y, -env.M));
  if (2.0 * y <= inv && inv <= x)
    best = std::min(best, std::pow(N, d) * std::pow(N * y, -sg) * std::pow(N * x, -env.M));
  if (x >= 0.5 * inv && y >= 0.5 * inv)
    best = std::min(best, std::pow(N, d - 2.0) / ((x + y) * (x + y)) * gauss);
  if (!std::isfinite(best)) throw std::logic_error("point pair outside every regime");
  return env.C * best;
}

std::vector<double> heat_apply_quadrature(const OperatorParams &op, const RadialGrid &grid,
                                          double t, std::span<const double> f) {
  if (f.size() != grid.size()) throw ParameterError("function length differs from grid length");
  if (grid.d != op.d) throw ParameterError("grid dimension differs from operator dimension");
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (f[j] == 0.0) continue;
      double lk = log_heat_sector(op, 0, t, grid.r[i], grid.r[j]);
      if (lk < -700.0) continue;
      s += grid.w[j] * f[j] * std::exp(lk);
    }
    out[i] = s;
  }
  return out;
}

} // namespace isq
