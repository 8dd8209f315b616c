#pragma once

#include <span>
#include <vector>

#include "isq/grids.hpp"
#include "isq/operator.hpp"

namespace isq {

// Two points of R^d by radii and the cosine of the angle between them.
struct PointPair {
  double rx = 1.0;
  double ry = 1.0;
  double cos_theta = 1.0;

  double distance_sq() const;
  double distance() const;
};

PointPair make_point_pair(double rx, double ry, double cos_theta);

inline constexpr int k_auto_lmax = -1;
inline constexpr int k_lmax_cap = 4096;

struct KernelValue {
  double value = 0.0;       // may underflow to 0; use log_value for ratios
  double log_value = 0.0;   // -inf when the kernel is exactly 0
  int terms = 0;            // number of angular terms summed
  bool truncated = false;   // l cap reached with a non-negligible last term
  bool resolved = true;     // false when cancellation in the zonal sum ate the result
};

// (2t)^{-1} (r r')^{-(d-2)/2} e^{-(r^2 + r'^2)/4t} I_nu(r r' / 2t) for sector l.
double heat_sector(const OperatorParams &op, int ell, double t, double r, double rp);
double log_heat_sector(const OperatorParams &op, int ell, double t, double r, double rp);

// Full heat kernel e^{-t L_a}(x, y) as a zonal sum. l_max = k_auto_lmax sums until convergence
// (cap k_lmax_cap); an explicit l_max is used as the cap.
KernelValue heat_full(const OperatorParams &op, double t, const PointPair &pp,
                      int l_max = k_auto_lmax);

// (4 pi t)^{-d/2} e^{-|x-y|^2/4t}
double euclidean_heat(int d, double t, double dist_sq);
double log_euclidean_heat(int d, double t, double dist_sq);

enum class EnvelopeShape { heat, riesz, diff_a_pos, diff_a_neg };

struct KernelEnvelope {
  EnvelopeShape shape = EnvelopeShape::heat;
  double C = 1.0;
  double c = 4.0;
  double M = 0.0; // polynomial decay order (diff_a_neg)
};

double heat_envelope(const OperatorParams &op, double t, const PointPair &pp,
                     const KernelEnvelope &env);
double log_heat_envelope(const OperatorParams &op, double t, const PointPair &pp,
                         const KernelEnvelope &env);

struct RieszValue {
  double value = 0.0;
  bool diverges = false;
  bool truncated = false;
  int evaluations = 0;
};

// L_a^{-s/2}(x, y) = Gamma(s/2)^{-1} int_0^inf e^{-tL_a}(x,y) t^{s/2} dt/t.
RieszValue riesz_kernel(const OperatorParams &op, double s, const PointPair &pp,
                        int l_max = k_auto_lmax);
double riesz_envelope(const OperatorParams &op, double s, const PointPair &pp);
// Gamma((d-s)/2) / (2^s pi^{d/2} Gamma(s/2)) |x-y|^{s-d}
double classical_riesz(int d, double s, double dist);

// K_N = (e^{Delta/N^2} - e^{-L_a/N^2}) - (e^{4 Delta/N^2} - e^{-4 L_a/N^2}).
KernelValue kernel_diff(const OperatorParams &op, double N, const PointPair &pp,
                        int l_max = k_auto_lmax);
// e^{t Delta}(x,y) - e^{-t L_a}(x,y), summed sector by sector.
KernelValue heat_difference(const OperatorParams &op, double t, const PointPair &pp,
                            int l_max = k_auto_lmax);
double diff_envelope(const OperatorParams &op, double N, const PointPair &pp,
                     const KernelEnvelope &env);

// Applies e^{-t L_a} to a radial function by quadrature against the l = 0 sector kernel.
std::vector<double> heat_apply_quadrature(const OperatorParams &op, const RadialGrid &grid,
                                          double t, std::span<const double> f);

} // namespace isq
