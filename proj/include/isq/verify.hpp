#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "isq/grids.hpp"
#include "isq/kernels.hpp"
#include "isq/operator.hpp"
#include "isq/spectral.hpp"

namespace isq {

enum class Verdict { pass, fail, diverges_as_designed };
std::string to_string(Verdict v);

// Tabular data attached to a report for plotting.
struct PlotTable {
  std::string kind; // "ratio-lattice", "slope-fit", "growth-curve" or empty
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, double>> params;
  double observed_min = 0.0;
  double observed_max = 0.0;
  std::vector<std::pair<std::string, double>> fitted;
  double slope = 0.0;
  bool has_slope = false;
  Verdict verdict = Verdict::fail;
  double runtime = 0.0; // seconds
  std::vector<std::string> notes;
  PlotTable plot;

  void set_param(const std::string &k, double v) { params.emplace_back(k, v); }
  void set_fit(const std::string &k, double v) { fitted.emplace_back(k, v); }
  double fit(const std::string &k) const; // NaN when absent
};

// Settings shared by the spectral checks.
struct GridSpec {
  double r_min = 1e-4;
  double r_max = 1e3;
  int n = 2048;
};
RadialGrid make_grid(const GridSpec &gs, int d);

// Least-squares slope and intercept of y against x.
std::pair<double, double> fit_line(std::span<const double> x, std::span<const double> y);

// ---- test families ----
enum class FamilyKind { dilated_bump, shifted_bump, riesz_of_bump, log_endpoint, inner_cutoff_power,
                        adapted_profile };

struct TestFamily {
  FamilyKind kind = FamilyKind::dilated_bump;
  double parameter = 1.0; // dilation, shell radius, or cutoff
};

// exp(-1/(1 - r^2)) on |r| < 1
double bump(double r);
// Smooth radial cutoff: 1 on [0, 1/2], 0 beyond 1.
double radial_cutoff(double r);
// |x|^{-sigma} exp(-|x|^2 / 8): its sector transform is Gaussian.
double adapted_profile(const OperatorParams &op, double r);

// ---- heat and kernel checks ----
struct LatticeOptions {
  std::vector<double> times{1e-2, 1.0, 1e2};
  int ratio_points = 9; // sqrt(t)/|x| sampled geometrically on [1e-2, 1e2]
  std::vector<double> cancellation{0.0, 0.5, 2.0, 8.0, 16.0}; // targets for z(1 - cos)
  int l_max = k_auto_lmax;
  double tol = 1e-6; // Euclidean calibration
};

// Angles with z(1 - cos) at the requested levels; includes cos = -1 when 2z is below the top level.
std::vector<double> lattice_angles(double z, std::span<const double> levels);

VerificationReport verify_euclidean_heat(int d, const LatticeOptions &opt);
VerificationReport verify_heat_envelope(const OperatorParams &op, const LatticeOptions &opt);

struct RieszOptions {
  double lo = 1e-2, hi = 1e2;
  int points = 7;
  int l_max = k_auto_lmax;
};
VerificationReport verify_riesz(const OperatorParams &op, double s, const RieszOptions &opt);
// Classical kernel at a = 0; returns the relative error.
double riesz_classical_error(int d, double s, const PointPair &pp);
VerificationReport verify_riesz_classical(int d, double s, const RieszOptions &opt,
                                          double tol = 1e-4);

struct DiffOptions {
  double N = 1.0;
  double fit_lo = 1e-2, fit_hi = 1e1;
  double val_lo = 1e-3, val_hi = 1e2;
  int points = 7;
  int l_max = k_auto_lmax;
};
VerificationReport verify_kernel_diff(const OperatorParams &op, const DiffOptions &opt);

VerificationReport verify_cross_path(const OperatorParams &op, const RadialGrid &grid,
                                     std::span<const double> times, double tol = 1e-5);

// ---- multipliers ----
struct MikhlinResult {
  std::vector<double> sup;       // per j, window [1e-3, 1e3]
  std::vector<double> sup_inner; // per j, window [1e-2, 1e2]
  std::vector<bool> unreliable;
  bool pass = false;
};
MikhlinResult mikhlin_check(const Multiplier &m, int order, std::span<const double> lambda_grid,
                            std::span<const double> inner_grid, double bound = 1e8);
int mikhlin_order(int d); // 3 floor(d/4) + 3
VerificationReport verify_mikhlin(const std::string &name, const Multiplier &m, int d);

VerificationReport multiplier_ratio_check(const HankelPlan &plan, const std::string &name,
                                          const Multiplier &m, double p,
                                          std::span<const double> dilations);

// ---- norm inequalities ----
struct GrowthCurve {
  std::vector<double> eps;
  std::vector<double> norm;
  double growth = 0.0;   // norm at smallest eps over norm at largest eps
  bool monotone = false;
};

VerificationReport hardy_sweep(const HankelPlan &plan, double s, double p,
                               std::span<const double> family);
VerificationReport classical_hardy_check(const HankelPlan &plan0, double s, double p);

// min over a radial family of ||grad f||^2 / ||f/|x|||^2 and the near-optimiser ratios.
VerificationReport sharp_hardy_check(int d);

VerificationReport equiv_sweep(const HankelPlan &plan_a, const HankelPlan &plan_0, double s,
                               double p, std::span<const double> dilations);
// Endpoint counterexample: gradient norm against the form norm as the cutoff shrinks.
VerificationReport endpoint_exclusion(int d, std::span<const double> cutoffs);

VerificationReport bernstein_fit(const HankelPlan &plan, double p, double q,
                                 std::span<const double> Ns);

VerificationReport sqfn_diff_check(const HankelPlan &plan_a, const HankelPlan &plan_0, double s,
                                   double p, std::span<const double> Ns,
                                   std::span<const double> dilations);

VerificationReport identity_report(const HankelPlan &plan, double p, LpKind kind, int jmin,
                                   int jmax, double tol = 1e-6);

VerificationReport sharpness_demo(const HankelPlan &plan, double p,
                                  std::span<const double> eps);

// ---- Schur test ----
struct SchurResult {
  double C0 = 0.0, C1 = 0.0, bound = 0.0;
  bool diverges = false;
};
// Radial Case-2 Hardy kernel |x|^{-s-sigma} |y|^{sigma+s-d} on |y| >= 3|x| with weight
// (|x|/|y|)^alpha.
SchurResult schur_case2(const OperatorParams &op, double s, double p, double alpha);
// Discrete weighted Schur test for K[i][j] with measures mu (rows) and nu (columns).
SchurResult schur_discrete(const std::vector<std::vector<double>> &K,
                           const std::vector<std::vector<double>> &w, std::span<const double> mu,
                           std::span<const double> nu, double p);
VerificationReport verify_schur(const OperatorParams &op, double s, double p);

// ---- Calderon-Zygmund decomposition ----
struct DyadicCube {
  int level = 0;                 // side 2^{-level}
  std::array<int, 3> index{0, 0, 0};
  bool operator==(const DyadicCube &o) const = default;
  bool operator<(const DyadicCube &o) const;
};

struct CZDecomposition {
  int dim = 1;
  int m = 0; // 2^m samples per side
  double h = 0.0, q = 1.0;
  std::vector<DyadicCube> cubes;
  std::vector<double> good; // f off the cubes, 0 on them
  int mu = 1;               // smoothing order floor(d/4) + 1
};

// f holds (2^m)^dim samples of [0,1)^dim in row-major order.
CZDecomposition cz_decompose(int dim, int m, std::span<const double> f, double h, double q);
// Selected cubes found by checking every cube and all its ancestors directly.
std::vector<DyadicCube> cz_oracle(int dim, int m, std::span<const double> f, double h, double q);

struct CZInvariants {
  bool good_bounded = true;
  bool averages_ok = true;
  bool disjoint = true;
  bool reconstructs = true;
  bool matches_oracle = true;
  bool all() const { return good_bounded && averages_ok && disjoint && reconstructs && matches_oracle; }
};
CZInvariants cz_check(const CZDecomposition &cz, std::span<const double> f);

// c_nu = (-1)^{nu+1} binom(mu, nu), nu = 1..mu
std::vector<double> smoothed_split_coefficients(int mu);
// || sum_nu c_nu e^{-nu r^2 L} b - b || / ||b|| for a radial b.
double smoothed_split_defect(const HankelPlan &plan, std::span<const double> b, double r, int mu);

VerificationReport verify_cz(int instances, std::uint64_t seed);

} // namespace isq
