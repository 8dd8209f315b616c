#include "isq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <tuple>

namespace isq {

bool DyadicCube::operator<(const DyadicCube &o) const {
  return std::tie(level, index) < std::tie(o.level, o.index);
}

namespace {

std::size_t side(int m) { return std::size_t{1} << m; }

std::size_t flat(int dim, int m, const std::array<std::size_t, 3> &ix) {
  std::size_t k = 0;
  for (int a = 0; a < dim; ++a) k = k * side(m) + ix[a];
  return k;
}

void check_input(int dim, int m, std::span<const double> f, double h, double q) {
  if (dim < 1 || dim > 3) throw ParameterError("CZ decomposition supports dimensions 1 to 3");
  if (m < 0 || m > 20) throw ParameterError("CZ grid level out of range");
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= side(m);
  if (f.size() != total) throw ParameterError("CZ sample count does not match the grid");
  if (!(h > 0.0) || !(q > 0.0)) throw ParameterError("CZ needs h > 0 and q > 0");
}

// Visit every sample index inside a cube.
template <class Fn> void for_each_sample(int dim, int m, const DyadicCube &c, Fn &&fn) {
  const std::size_t len = side(m - c.level);
  std::array<std::size_t, 3> lo{0, 0, 0}, ix{0, 0, 0};
  for (int a = 0; a < dim; ++a) lo[a] = static_cast<std::size_t>(c.index[a]) * len;
  std::size_t count = 1;
  for (int a = 0; a < dim; ++a) count *= len;
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t rest = k;
    for (int a = dim - 1; a >= 0; --a) {
      ix[a] = lo[a] + rest % len;
      rest /= len;
    }
    fn(flat(dim, m, ix));
  }
}

double cube_mean(int dim, int m, std::span<const double> f, double q, const DyadicCube &c) {
  double s = 0.0;
  std::size_t n = 0;
  for_each_sample(dim, m, c, [&](std::size_t k) {
    s += std::pow(std::abs(f[k]), q);
    ++n;
  });
  return s / static_cast<double>(n);
}

DyadicCube parent(const DyadicCube &c) {
  DyadicCube p = c;
  p.level -= 1;
  for (auto &i : p.index) i /= 2;
  return p;
}

bool contains(const DyadicCube &outer, const DyadicCube &inner) {
  if (inner.level < outer.level) return false;
  const int shift = inner.level - outer.level;
  for (int a = 0; a < 3; ++a)
    if ((inner.index[a] >> shift) != outer.index[a]) return false;
  return true;
}

} // namespace

CZDecomposition cz_decompose(int dim, int m, std::span<const double> f, double h, double q) {
  check_input(dim, m, f, h, q);
  const double hq = std::pow(h, q);
  // pyramid of |f|^q means, finest level first
  std::vector<std::vector<double>> mean(m + 1);
  mean[m].resize(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) mean[m][k] = std::pow(std::abs(f[k]), q);
  for (int lev = m - 1; lev >= 0; --lev) {
    const std::size_t n = side(lev);
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= n;
    mean[lev].assign(total, 0.0);
    for (std::size_t k = 0; k < mean[lev + 1].size(); ++k) {
      std::size_t rest = k, coarse = 0, stride = 1;
      for (int a = dim - 1; a >= 0; --a) {
        coarse += ((rest % (2 * n)) / 2) * stride;
        rest /= 2 * n;
        stride *= n;
      }
      mean[lev][coarse] += mean[lev + 1][k] / static_cast<double>(1 << dim);
    }
  }
  if (mean[0][0] > hq) throw ParameterError("height too small: the root cube already exceeds it");

  CZDecomposition cz;
  cz.dim = dim;
  cz.m = m;
  cz.h = h;
  cz.q = q;
  cz.mu = dim / 4 + 1;
  std::vector<DyadicCube> stack{DyadicCube{}};
  while (!stack.empty()) {
    DyadicCube c = stack.back();
    stack.pop_back();
    if (c.level == m) continue;
    for (int child = 0; child < (1 << dim); ++child) {
      DyadicCube k;
      k.level = c.level + 1;
      for (int a = 0; a < dim; ++a) k.index[a] = 2 * c.index[a] + ((child >> (dim - 1 - a)) & 1);
      std::array<std::size_t, 3> ix{0, 0, 0};
      for (int a = 0; a < dim; ++a) ix[a] = static_cast<std::size_t>(k.index[a]);
      if (mean[k.level][flat(dim, k.level, ix)] > hq)
        cz.cubes.push_back(k);
      else
        stack.push_back(k);
    }
  }
  std::sort(cz.cubes.begin(), cz.cubes.end());
  cz.good.assign(f.begin(), f.end());
  for (const auto &c : cz.cubes) for_each_sample(dim, m, c, [&](std::size_t k) { cz.good[k] = 0.0; });
  return cz;
}

std::vector<DyadicCube> cz_oracle(int dim, int m, std::span<const double> f, double h, double q) {
  check_input(dim, m, f, h, q);
  const double hq = std::pow(h, q);
  std::vector<DyadicCube> out;
  for (int lev = 1; lev <= m; ++lev) {
    const std::size_t n = side(lev);
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= n;
    for (std::size_t k = 0; k < total; ++k) {
      DyadicCube c;
      c.level = lev;
      std::size_t rest = k;
      for (int a = dim - 1; a >= 0; --a) {
        c.index[a] = static_cast<int>(rest % n);
        rest /= n;
      }
      if (cube_mean(dim, m, f, q, c) <= hq) continue;
      bool maximal = true;
      for (DyadicCube anc = parent(c); anc.level >= 0 && maximal; anc = parent(anc)) {
        if (cube_mean(dim, m, f, q, anc) > hq) maximal = false;
        if (anc.level == 0) break;
      }
      if (maximal) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CZInvariants cz_check(const CZDecomposition &cz, std::span<const double> f) {
  CZInvariants inv;
  const double tol = 1e-12;
  for (double g : cz.good)
    if (std::abs(g) > cz.h * (1.0 + tol)) inv.good_bounded = false;
  const double hq = std::pow(cz.h, cz.q);
  for (const auto &c : cz.cubes) {
    const double avg = cube_mean(cz.dim, cz.m, f, cz.q, c) / hq; // h^{-q} int |f|^q / |Q|
    if (avg < 1.0 || avg > std::pow(2.0, cz.dim) * (1.0 + tol)) inv.averages_ok = false;
  }
  for (std::size_t i = 0; i < cz.cubes.size(); ++i)
    for (std::size_t j = i + 1; j < cz.cubes.size(); ++j)
      if (contains(cz.cubes[i], cz.cubes[j]) || contains(cz.cubes[j], cz.cubes[i])) inv.disjoint = false;
  // g + sum_k chi_Q f must give f back sample by sample
  std::vector<double> rebuilt = cz.good;
  for (const auto &c : cz.cubes)
    for_each_sample(cz.dim, cz.m, c, [&](std::size_t k) { rebuilt[k] += f[k]; });
  for (std::size_t k = 0; k < f.size(); ++k)
    if (rebuilt[k] != f[k]) inv.reconstructs = false;
  inv.matches_oracle = cz.cubes == cz_oracle(cz.dim, cz.m, f, cz.h, cz.q);
  return inv;
}

std::vector<double> smoothed_split_coefficients(int mu) {
  if (mu < 1) throw ParameterError("smoothing order must be >= 1");
  std::vector<double> c(mu);
  double binom = 1.0;
  for (int nu = 1; nu <= mu; ++nu) {
    binom = binom * (mu - nu + 1) / nu;
    c[nu - 1] = (nu % 2 == 1 ? 1.0 : -1.0) * binom;
  }
  return c;
}

double smoothed_split_defect(const HankelPlan &plan, std::span<const double> b, double r, int mu) {
  auto c = smoothed_split_coefficients(mu);
  const auto &g = plan.grid();
  std::vector<double> acc(b.size(), 0.0);
  for (int nu = 1; nu <= mu; ++nu) {
    const double t = nu * r * r;
    auto e = plan.apply([t](double k) { return std::exp(-t * k * k); }, b);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c[nu - 1] * e[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= b[i];
  return lp_norm(g, acc, 2.0) / lp_norm(g, b, 2.0);
}

VerificationReport verify_cz(int instances, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "cz";
  rep.set_param("instances", instances);
  rep.set_param("seed", static_cast<double>(seed));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int failures = 0, total_cubes = 0;
  double worst_hi = 0.0, worst_lo = std::numeric_limits<double>::infinity();
  for (int inst = 0; inst < instances; ++inst) {
    const int dim = 1 + inst % 2;
    const int m = dim == 1 ? 3 + static_cast<int>(rng() % 8) : 2 + static_cast<int>(rng() % 5);
    const double q = std::array<double, 3>{1.0, 1.5, 2.0}[rng() % 3];
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a) n *= side(m);
    // sparse spikes on a small background
    std::vector<double> f(n);
    const double density = 0.02 + 0.2 * uni(rng);
    for (auto &v : f) v = uni(rng) < density ? 1.0 + 20.0 * uni(rng) : 0.1 * uni(rng);
    double root = 0.0;
    for (double v : f) root += std::pow(v, q);
    root /= static_cast<double>(n);
    const double h = std::pow(root, 1.0 / q) * (1.05 + 3.0 * uni(rng));
    auto cz = cz_decompose(dim, m, f, h, q);
    auto inv = cz_check(cz, f);
    if (!inv.all()) {
      ++failures;
      rep.notes.push_back("instance " + std::to_string(inst) + " breaks an invariant");
    }
    total_cubes += static_cast<int>(cz.cubes.size());
    const double hq = std::pow(h, q);
    for (const auto &c : cz.cubes) {
      const double avg = cube_mean(dim, m, f, q, c) / hq;
      worst_hi = std::max(worst_hi, avg / std::pow(2.0, dim));
      worst_lo = std::min(worst_lo, avg);
    }
  }
  rep.set_fit("failures", failures);
  rep.set_fit("cubes", total_cubes);
  rep.observed_min = total_cubes > 0 ? worst_lo : 0.0; // min of h^{-q} avg, must be >= 1
  rep.observed_max = worst_hi;                         // max of h^{-q} avg / 2^d, must be <= 1
  rep.verdict = failures == 0 ? Verdict::pass : Verdict::fail;
  rep.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

} // namespace isq
