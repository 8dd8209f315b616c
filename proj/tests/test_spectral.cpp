#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "isq/grids.hpp"
#include "isq/operator.hpp"
#include "isq/spectral.hpp"
#include "isq/verify.hpp"

using namespace isq;

namespace {

const RadialGrid &test_grid(int d) {
  static std::map<int, RadialGrid> grids;
  auto it = grids.find(d);
  if (it == grids.end()) it = grids.emplace(d, make_log_grid(1e-4, 1e2, 512, d)).first;
  return it->second;
}

double rel_l2(const RadialGrid &g, const std::vector<double> &a, const std::vector<double> &b) {
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return lp_norm(g, diff, 2.0) / lp_norm(g, b, 2.0);
}

} // namespace

TEST_CASE("plan round trip and Parseval") {
  for (double a : {-0.25, 0.0, 1.0}) {
    auto op = make_params(3, a);
    auto plan = cached_plan(op, 0, test_grid(3));
    CHECK(plan->calibration_error() < 1e-6);
    CHECK(std::is_sorted(plan->frequencies().begin(), plan->frequencies().end()));
    auto f = sample(test_grid(3), [&](double r) { return adapted_profile(op, r); });
    auto c = plan->forward(f);
    double c2 = 0.0;
    for (double v : c) c2 += v * v;
    const double norm = lp_norm(test_grid(3), f, 2.0);
    CHECK(std::sqrt(sphere_area(3) * c2) == doctest::Approx(norm).epsilon(1e-8));
    CHECK(rel_l2(test_grid(3), plan->inverse(c), f) < 1e-10);
  }
  // the cache hands back the same plan
  CHECK(cached_plan(make_params(3, 0.0), 0, test_grid(3)) == cached_plan(make_params(3, 0.0), 0, test_grid(3)));
}

TEST_CASE("free heat flow of a gaussian") {
  for (int d : {3, 4}) {
    const auto &g = test_grid(d);
    auto plan = cached_plan(make_params(d, 0.0), 0, g);
    auto f = sample(g, [](double r) { return std::exp(-0.5 * r * r); });
    for (double t : {0.1, 1.0, 5.0}) {
      auto u = plan->apply([t](double k) { return std::exp(-t * k * k); }, f);
      auto exact = sample(g, [&](double r) {
        return std::pow(1.0 + 2.0 * t, -0.5 * d) * std::exp(-r * r / (2.0 * (1.0 + 2.0 * t)));
      });
      CHECK(rel_l2(g, u, exact) < 1e-7);
      auto via_multiplier = apply_multiplier(*plan, heat_symbol(t), f);
      CHECK(rel_l2(g, via_multiplier, u) < 1e-13);
    }
  }
}

TEST_CASE("heat flow of the adapted profile keeps its shape") {
  // e^{-t L} r^{-sigma} e^{-r^2/8} = (2/(2+t))^{d/2 - sigma} r^{-sigma} e^{-r^2/(4(2+t))}
  for (double a : {-0.25, -0.1, 0.5}) {
    auto op = make_params(3, a);
    const auto &g = test_grid(3);
    auto plan = cached_plan(op, 0, g);
    const double sg = op.sigma();
    auto f = sample(g, [&](double r) { return adapted_profile(op, r); });
    const double t = 1.5;
    auto u = plan->apply([t](double k) { return std::exp(-t * k * k); }, f);
    auto exact = sample(g, [&](double r) {
      return std::pow(2.0 / (2.0 + t), 1.5 - sg) * std::pow(r, -sg) * std::exp(-r * r / (4.0 * (2.0 + t)));
    });
    CAPTURE(a);
    CHECK(rel_l2(g, u, exact) < 1e-6);
  }
}

TEST_CASE("fractional powers") {
  const int d = 3;
  const auto &g = test_grid(d);
  auto plan = cached_plan(make_params(d, 0.0), 0, g);
  auto f = sample(g, [](double r) { return std::exp(-0.5 * r * r); });
  // -Laplacian of e^{-r^2/2} is (d - r^2) e^{-r^2/2}
  auto lf = frac_power(*plan, 2.0, +1, f);
  CHECK_FALSE(lf.diverges);
  auto exact = sample(g, [](double r) { return (3.0 - r * r) * std::exp(-0.5 * r * r); });
  CHECK(rel_l2(g, lf.values, exact) < 5e-5); // k^2 amplifies the top of the discrete spectrum
  auto back = frac_power(*plan, 2.0, -1, lf.values);
  CHECK(rel_l2(g, back.values, f) < 1e-6);
  CHECK_THROWS_AS(frac_power(*plan, 1.0, 0, f), ParameterError);
}

TEST_CASE("direct Hankel quadrature of a gaussian") {
  const int d = 3;
  const auto &g = test_grid(d);
  auto f = sample(g, [](double r) { return std::exp(-0.5 * r * r); });
  for (double k : {0.1, 1.0, 3.0})
    CHECK(hankel_transform(g, 0.5, f, k) == doctest::Approx(std::exp(-0.5 * k * k)).epsilon(1e-8));
}

TEST_CASE("dyadic pieces") {
  auto Ns = dyadic_range(-2, 2);
  REQUIRE(Ns.size() == 5);
  CHECK(Ns.front() == 0.25);
  CHECK(Ns.back() == 4.0);
  // telescoping: the smooth pieces sum to phi(k/4) - phi(8k), which is 1 on [1/4, 4]
  double sum = 0.0;
  for (double N : Ns) sum += smooth_psi_symbol(N)(1.3);
  CHECK(sum == doctest::Approx(1.0));
  CHECK(smooth_phi(0.5) == 1.0);
  CHECK(smooth_phi(2.5) == 0.0);
  CHECK(smooth_phi(1.5) == doctest::Approx(0.5));
}

TEST_CASE("square function of a gaussian is comparable to the function") {
  const int d = 3;
  const auto &g = test_grid(d);
  auto plan = cached_plan(make_params(d, 0.0), 0, g);
  auto f = sample(g, [](double r) { return std::exp(-0.5 * r * r); });
  auto Ns = dyadic_range(-24, 24);
  auto S = square_function(*plan, f, 0.0, Ns, LpKind::smooth);
  const double nf = lp_norm(g, f, 2.0), ns = lp_norm(g, S, 2.0);
  // sum of psi^2 lies in [1/2, 1] wherever the pieces sum to 1
  CHECK(ns <= nf * (1.0 + 1e-9));
  CHECK(ns >= nf / std::sqrt(2.0) * (1.0 - 1e-9));
  CHECK(identity_check(*plan, f, Ns, 2.0, LpKind::smooth) / nf < 1e-10);
}
