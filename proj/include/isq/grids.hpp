#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isq {

// Raised for any out-of-range or inconsistent parameter.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int k_gll_order = 8;

// Gauss-Lobatto-Legendre nodes and weights on [-1, 1], ascending.
struct GllRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GllRule &gll_rule(int order);

// Composite GLL grid, uniform in u = log r, shared element endpoints.
// Node i lives in element floor(i / order) (the last node belongs to the
// last element).
struct RadialGrid {
  int d = 3;
  double r_min = 0.0;
  double r_max = 0.0;
  int order = k_gll_order;
  int elements = 0;
  std::vector<double> r;
  std::vector<double> u;
  std::vector<double> w_u; // int g(u) du ~ sum w_u g
  std::vector<double> w;   // int f(r) r^{d-1} dr ~ sum w f

  std::size_t size() const { return r.size(); }
  double element_width() const;
};

// `n` is the number of GLL intervals, rounded up to a multiple of the order.
RadialGrid make_log_grid(double r_min, double r_max, int n, int d, int order = k_gll_order);

// Geometric points a..b inclusive.
std::vector<double> geometric_points(double a, double b, std::size_t count);

// Surface area of the unit sphere S^{d-1}.
double sphere_area(int d);

std::vector<double> sample(const RadialGrid &g, const std::function<double(double)> &fn);

// 1 on [a, b], 1/2 at nodes that coincide with a or b.
std::vector<double> indicator(const RadialGrid &g, double a, double b);

// omega_{d-1} int f r^{d-1} dr
double integrate_radial(const RadialGrid &g, std::span<const double> f);

// Norm of a radial function in L^p(R^d); p = infinity gives the max.
double lp_norm(const RadialGrid &g, std::span<const double> f, double p);

// Same, restricted to r in [lo, hi] (nodes outside get zero weight).
double lp_norm_on(const RadialGrid &g, std::span<const double> f, double p, double lo,
                  double hi);

// Barycentric interpolation of grid data at an arbitrary radius inside the grid.
double interpolate(const RadialGrid &g, std::span<const double> f, double r);

// Spectral derivative d/du on the grid (element-wise, shared nodes averaged).
std::vector<double> derivative_u(const RadialGrid &g, std::span<const double> f);

struct CheckedValue {
  double value = 0.0;
  double coarse = 0.0; // same quantity with r_min -> 10 r_min
  bool diverges = false;
};

// || |x|^{-s} f ||_p, recomputed without the nodes below 10 r_min; flagged
// when the two differ by more than 10%.
CheckedValue weighted_lp_norm(const RadialGrid &g, std::span<const double> f, double p,
                              double s);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0; // difference between the last two refinements
  int evaluations = 0;
  bool diverges = false;
};

// int_0^inf g(t) dt by the exp-sinh rule t = t0 exp(pi/2 sinh tau), halving the
// step until successive sums agree to `rel_tol`. The integrand is expected to
// decay like a power at 0 and at least like a power at infinity; a non-negligible
// contribution at either truncation end raises the divergence flag.
QuadratureResult time_quadrature(const std::function<double(double)> &g, double t0 = 1.0,
                                 double rel_tol = 1e-8);

} // namespace isq
