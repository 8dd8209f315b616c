#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "isq/grids.hpp"
#include "isq/operator.hpp"

namespace isq {

// Symbol m(lambda) with optional analytic derivatives d^j m / d lambda^j.
struct Multiplier {
  std::function<double(double)> symbol;
  std::function<double(double, int)> derivative; // may be empty
  int max_analytic_order = -1;

  double operator()(double k) const { return symbol(k); }
};

Multiplier identity_symbol();
Multiplier heat_symbol(double t);     // e^{-t k^2}
Multiplier power_symbol(double s);    // k^s
Multiplier gaussian_symbol();         // e^{-k^2}
// Littlewood-Paley cutoffs built from the order-7 smoothstep.
double smooth_phi(double x);
double smooth_phi_derivative(double x, int order);
Multiplier smooth_phi_symbol(double N);
Multiplier smooth_psi_symbol(double N);
Multiplier heat_lp_symbol(double N); // e^{-k^2/N^2} - e^{-4k^2/N^2}

// Spectral decomposition of one Bessel sector of L_a on a radial grid.
// Functions are handled in the physical gauge: f(x) = f(r) Y_l(omega).
class HankelPlan {
public:
  HankelPlan(const OperatorParams &op, int ell, const RadialGrid &grid);

  const OperatorParams &params() const { return op_; }
  int ell() const { return ell_; }
  double nu() const { return nu_; }
  const RadialGrid &grid() const { return grid_; }
  // Eigenfrequencies k_j >= 0, ascending.
  const std::vector<double> &frequencies() const { return k_; }
  std::size_t modes() const { return k_.size(); }

  // Coefficients in the orthonormal eigenbasis; || f ||_{L^2(R^d)}^2 = omega * |c|^2.
  std::vector<double> forward(std::span<const double> f) const;
  std::vector<double> inverse(std::span<const double> c) const;
  std::vector<double> apply(const std::function<double(double)> &m,
                            std::span<const double> f) const;
  // Applies m to precomputed coefficients.
  std::vector<double> apply_coefficients(const std::function<double(double)> &m,
                                         std::span<const double> c) const;

  // Relative L^2 error of the closed-form heat check run at construction.
  double calibration_error() const { return calibration_error_; }

private:
  OperatorParams op_;
  int ell_ = 0;
  double nu_ = 0.0;
  RadialGrid grid_;
  std::size_t active_ = 0; // number of unknowns (last node dropped when nu = 0)
  std::vector<double> k_;
  std::vector<double> to_y_; // f_i -> y_i scale: sqrt(M_i) r_i^{(d-2)/2}
  Eigen::MatrixXd q_;        // eigenvectors, columns
  double calibration_error_ = 0.0;
};

// Plans are expensive; this cache builds each (d, a, ell, grid) once.
std::shared_ptr<const HankelPlan> cached_plan(const OperatorParams &op, int ell,
                                              const RadialGrid &grid);

// Direct quadrature of int f(r) (kr)^{-(d-2)/2} J_nu(kr) r^{d-1} dr. For a = 0, l = 0 this is
// (2 pi)^{-d/2} times the Euclidean Fourier transform of the radial function.
double hankel_transform(const RadialGrid &grid, double nu, std::span<const double> f, double k);

std::vector<double> apply_multiplier(const HankelPlan &plan, const Multiplier &m,
                                     std::span<const double> f);

struct FlaggedFunction {
  std::vector<double> values;
  bool diverges = false;
};

// L^{+-s/2} f. For negative powers the modes below 10 k_min are dropped in a
// second evaluation; a change above 10% raises the divergence flag.
FlaggedFunction frac_power(const HankelPlan &plan, double s, int sign, std::span<const double> f);

enum class LpKind { smooth, heat };

std::vector<double> lp_proj(const HankelPlan &plan, std::span<const double> f, double N,
                            LpKind kind);

// Dyadic N = 2^j for j in [jmin, jmax].
std::vector<double> dyadic_range(int jmin, int jmax);

// (sum_N N^{2s} |P_N f|^2)^{1/2}
std::vector<double> square_function(const HankelPlan &plan, std::span<const double> f, double s,
                                    std::span<const double> Ns, LpKind kind);

// || f - sum_N P_N f ||_p
double identity_check(const HankelPlan &plan, std::span<const double> f,
                      std::span<const double> Ns, double p, LpKind kind);

} // namespace isq
