#include "doctest.h"

#include <cmath>

#include "isq/grids.hpp"

using namespace isq;

TEST_CASE("gll rule integrates polynomials of degree 2*order - 3 exactly") {
  const auto &rule = gll_rule(8);
  REQUIRE(rule.x.size() == 9);
  CHECK(rule.x.front() == doctest::Approx(-1.0));
  CHECK(rule.x.back() == doctest::Approx(1.0));
  double s0 = 0.0, s14 = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    s0 += rule.w[i];
    s14 += rule.w[i] * std::pow(rule.x[i], 14);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
  for (std::size_t i = 1; i < rule.x.size(); ++i) CHECK(rule.x[i] > rule.x[i - 1]);
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI));
  CHECK(sphere_area(4) == doctest::Approx(2.0 * M_PI * M_PI));
  CHECK(sphere_area(5) == doctest::Approx(8.0 * M_PI * M_PI / 3.0));
}

TEST_CASE("log grid layout") {
  auto g = make_log_grid(1e-3, 1e2, 250, 3);
  CHECK(g.elements * g.order == 256); // rounded up to a multiple of the order
  CHECK(g.size() == 257);
  CHECK(g.r.front() == doctest::Approx(1e-3));
  CHECK(g.r.back() == doctest::Approx(1e2));
  CHECK(g.element_width() == doctest::Approx(std::log(1e5) / g.elements));
  CHECK_THROWS_AS(make_log_grid(1.0, 0.5, 64, 3), ParameterError);
  auto pts = geometric_points(1e-2, 1e2, 5);
  REQUIRE(pts.size() == 5);
  CHECK(pts[2] == doctest::Approx(1.0));
}

TEST_CASE("gaussian L^p norms match (2 pi / p)^(d / 2p)") {
  for (int d : {3, 4, 5}) {
    auto g = make_log_grid(1e-4, 30.0, 512, d);
    auto f = sample(g, [](double r) { return std::exp(-0.5 * r * r); });
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double exact = std::pow(2.0 * M_PI / p, d / (2.0 * p));
      CHECK(lp_norm(g, f, p) == doctest::Approx(exact).epsilon(1e-9));
    }
    CHECK(lp_norm(g, f, INFINITY) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(integrate_radial(g, f) == doctest::Approx(std::pow(2.0 * M_PI, d / 2.0)).epsilon(1e-9));
  }
}

TEST_CASE("restricted norm and indicator") {
  auto g = make_log_grid(1e-3, 1e2, 512, 3);
  auto one = sample(g, [](double) { return 1.0; });
  // ||1||_{L^1(1 <= |x| <= 2)} = 4 pi (8 - 1) / 3, up to the partial element at the ends
  CHECK(lp_norm_on(g, one, 1.0, 1.0, 2.0) == doctest::Approx(28.0 * M_PI / 3.0).epsilon(0.05));
  auto ind = indicator(g, 1.0, 2.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.r[i] < 0.99) CHECK(ind[i] == 0.0);
    if (g.r[i] > 1.01 && g.r[i] < 1.99) CHECK(ind[i] == 1.0);
  }
}

TEST_CASE("weighted norm against the gamma closed form") {
  const int d = 3;
  auto g = make_log_grid(1e-6, 30.0, 512, d);
  auto f = sample(g, [](double r) { return std::exp(-0.5 * r * r); });
  const double s = 0.5, p = 2.0;
  const double e = (d - s * p) / 2.0;
  const double exact = std::pow(sphere_area(d) * 0.5 * std::pow(2.0 / p, e) * std::tgamma(e), 1.0 / p);
  auto v = weighted_lp_norm(g, f, p, s);
  CHECK_FALSE(v.diverges);
  CHECK(v.value == doctest::Approx(exact).epsilon(1e-6));
  // s p > d: power divergence at the origin
  auto bad = weighted_lp_norm(g, f, 3.0, 1.5);
  CHECK(bad.diverges);
}

TEST_CASE("interpolation and spectral derivative") {
  auto g = make_log_grid(1e-2, 1e2, 256, 3);
  auto f = sample(g, [](double r) { return std::sin(std::log(r)); });
  for (double r : {0.0123, 0.77, 3.3, 51.0})
    CHECK(interpolate(g, f, r) == doctest::Approx(std::sin(std::log(r))).epsilon(1e-9));
  auto df = derivative_u(g, f);
  for (std::size_t i = 0; i < g.size(); i += 17) CHECK(df[i] == doctest::Approx(std::cos(g.u[i])).epsilon(1e-8));
}

TEST_CASE("time quadrature") {
  auto half = time_quadrature([](double t) { return std::exp(-t) / std::sqrt(t); });
  CHECK_FALSE(half.diverges);
  CHECK(half.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));
  auto three = time_quadrature([](double t) { return std::exp(2.0 * std::log(t) - t); });
  CHECK(three.value == doctest::Approx(2.0).epsilon(1e-8));
  auto log_div = time_quadrature([](double t) { return 1.0 / (1.0 + t); });
  CHECK(log_div.diverges);
}
