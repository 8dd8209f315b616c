#pragma once

#include <span>
#include <string>
#include <vector>

#include "isq/grids.hpp"

namespace isq {

// Parameters of L_a = -Laplacian + a/|x|^2 on R^d.
struct OperatorParams {
  int d = 3;
  double a = 0.0;

  double lambda() const { return 0.5 * (d - 2); } // (d-2)/2
  double endpoint() const { return -lambda() * lambda(); }
  double sigma() const;
  double nu(int l) const;
  double r0() const;       // d / (d - sigma)
  double r0_prime() const; // d / sigma, +inf when sigma <= 0
  bool at_endpoint() const;
};

struct SectorOrder {
  int ell = 0;
  double nu = 0.0;
};
SectorOrder sector_order(const OperatorParams &op, int ell);

// Validates d >= 3 and a >= -((d-2)/2)^2 (small round-off below the endpoint is
// snapped onto it).
OperatorParams make_params(int d, double a);

// Accepts a number or the literal "endpoint".
double parse_coupling(const std::string &text, int d);

struct Interval {
  double lo = 0.0; // open interval (lo, hi) in 1/p
  double hi = 0.0;
  bool valid = true; // false when the theorem's hypotheses fail
  bool empty() const { return !valid || !(lo < hi); }
  // Points within 1e-12 of an edge count as on the boundary, i.e. outside.
  bool contains(double x) const { return valid && x > lo + 1e-12 && x < hi - 1e-12; }
};

// Window in 1/p where the Hardy-type estimate || |x|^{-s} f ||_p <~ || L^{s/2} f ||_p holds.
Interval hardy_window(const OperatorParams &op, double s);
// Window for || (-Delta)^{s/2} f ||_p <~ || L^{s/2} f ||_p.
Interval equivalence_forward_window(const OperatorParams &op, double s);
// Window for || L^{s/2} f ||_p <~ || (-Delta)^{s/2} f ||_p.
Interval equivalence_reverse_window(const OperatorParams &op, double s);

// Range of p for the square-function difference estimate, a < 0 only:
// max(1, d/(d+s-sigma)) < p < d/sigma.
struct PRange {
  double lo = 1.0;
  double hi = 0.0;
  bool contains(double p) const { return p > lo && p < hi; }
};
PRange sqfn_difference_range(const OperatorParams &op, double s);

// Bernstein exponents p <= q are admissible when both lie in (r0, r0').
bool bernstein_admissible(const OperatorParams &op, double p, double q);

// mu = floor(d/4) + 1
int smoothing_order(int d);

// -g'' + (4 nu^2 - 1)/(4 r^2) g for g sampled on a grid with >= 512 nodes,
// using spectral derivatives in u = log r.
std::vector<double> liouville_apply(const RadialGrid &grid, std::span<const double> g,
                                    double nu);

} // namespace isq
