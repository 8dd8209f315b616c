#include "doctest.h"

#include <cmath>
#include <random>

#include "isq/grids.hpp"
#include "isq/operator.hpp"
#include "isq/spectral.hpp"
#include "isq/verify.hpp"

using namespace isq;

TEST_CASE("verdict names and line fit") {
  CHECK(to_string(Verdict::pass) == "pass");
  CHECK(to_string(Verdict::fail) == "fail");
  CHECK(to_string(Verdict::diverges_as_designed) == "diverges-as-designed");
  std::vector<double> x{0.0, 1.0, 2.0, 3.0}, y{1.0, 3.0, 5.0, 7.0};
  auto [slope, icpt] = fit_line(x, y);
  CHECK(slope == doctest::Approx(2.0));
  CHECK(icpt == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}), ParameterError);
}

TEST_CASE("Mikhlin symbol conditions") {
  CHECK(mikhlin_order(3) == 3);
  CHECK(mikhlin_order(4) == 6);
  CHECK(mikhlin_order(8) == 9);
  CHECK(verify_mikhlin("gaussian", gaussian_symbol(), 3).verdict == Verdict::pass);
  CHECK(verify_mikhlin("one", identity_symbol(), 4).verdict == Verdict::pass);
  CHECK(verify_mikhlin("phi", smooth_phi_symbol(1.0), 5).verdict == Verdict::pass);
  CHECK(verify_mikhlin("psi", smooth_psi_symbol(1.0), 3).verdict == Verdict::pass);
  // lambda itself is unbounded
  CHECK(verify_mikhlin("lambda", power_symbol(1.0), 3).verdict == Verdict::fail);
}

TEST_CASE("CZ decomposition of an indicator") {
  // f = 1 on [0, 1/2) at height 3/4: the single cube [0, 1/2) is selected
  std::vector<double> f(8, 0.0);
  for (int i = 0; i < 4; ++i) f[i] = 1.0;
  auto cz = cz_decompose(1, 3, f, 0.75, 1.0);
  REQUIRE(cz.cubes.size() == 1);
  CHECK(cz.cubes[0].level == 1);
  CHECK(cz.cubes[0].index[0] == 0);
  for (double g : cz.good) CHECK(g == 0.0);
  CHECK(cz_check(cz, f).all());
  CHECK(cz.mu == 1);
  // the root already exceeds a height of 1/4
  CHECK_THROWS_AS(cz_decompose(1, 3, f, 0.25, 1.0), ParameterError);
  CHECK_THROWS_AS(cz_decompose(1, 3, std::vector<double>(7, 0.0), 1.0, 1.0), ParameterError);
}

TEST_CASE("CZ decomposition against the brute-force oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 1 + trial % 3, m = dim == 3 ? 3 : 4;
    std::size_t n = std::size_t{1} << (m * dim);
    std::vector<double> f(n);
    for (auto &v : f) v = uni(rng) < 0.1 ? 10.0 * uni(rng) : 0.2 * uni(rng);
    double mean = 0.0;
    for (double v : f) mean += v * v;
    mean /= static_cast<double>(n);
    const double h = std::sqrt(mean) * 1.3;
    auto cz = cz_decompose(dim, m, f, h, 2.0);
    CAPTURE(trial);
    CHECK(cz_check(cz, f).all());
  }
  auto rep = verify_cz(100, 5);
  CHECK(rep.verdict == Verdict::pass);
  CHECK(rep.fit("failures") == 0.0);
}

TEST_CASE("smoothed split") {
  CHECK(smoothed_split_coefficients(1) == std::vector<double>{1.0});
  CHECK(smoothed_split_coefficients(3) == std::vector<double>{3.0, -3.0, 1.0});
  CHECK_THROWS_AS(smoothed_split_coefficients(0), ParameterError);
  auto op = make_params(4, -0.5);
  auto g = make_log_grid(1e-4, 1e2, 512, 4);
  auto plan = cached_plan(op, 0, g);
  auto b = sample(g, [&](double r) { return adapted_profile(op, r); });
  const int mu = smoothing_order(4);
  const double d1 = smoothed_split_defect(*plan, b, 1.0, mu);
  const double d2 = smoothed_split_defect(*plan, b, 0.1, mu);
  const double d3 = smoothed_split_defect(*plan, b, 0.01, mu);
  CHECK(d1 > d2);
  CHECK(d2 > d3);
  CHECK(d3 < 1e-3);
}

TEST_CASE("Schur constant in closed form") {
  // d = 3, a = 0, s = 1, p = 2, alpha = 3: the cap fraction is (rho^2 + 2 rho - 15) / (4 rho) on [3, 5]
  auto op = make_params(3, 0.0);
  auto prim = [](double r) { return 0.25 * (2.0 * std::sqrt(r) + 10.0 * std::pow(r, -1.5) - 4.0 / std::sqrt(r)); };
  const double c0 = 4.0 * M_PI * (prim(5.0) - prim(3.0) + 2.0 / std::sqrt(5.0));
  auto res = schur_case2(op, 1.0, 2.0, 3.0);
  CHECK_FALSE(res.diverges);
  CHECK(res.C0 == doctest::Approx(c0).epsilon(1e-10));
  CHECK(res.bound == doctest::Approx(std::sqrt(res.C0 * res.C1)));
  // window is (p(s + sigma), p'(d - s - sigma)) = (2, 4)
  CHECK(schur_case2(op, 1.0, 2.0, 2.0).diverges);
  CHECK(schur_case2(op, 1.0, 2.0, 4.0).diverges);
  CHECK(verify_schur(op, 1.0, 2.0).verdict == Verdict::pass);
  CHECK_THROWS_AS(verify_schur(make_params(3, 1.0), 0.5, 2.0), ParameterError);
}

TEST_CASE("discrete Schur bound dominates random operator norms") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::size_t n = 12;
  for (double p : {1.5, 2.0, 4.0}) {
    std::vector<std::vector<double>> K(n, std::vector<double>(n)), w = K;
    std::vector<double> mu(n), nu(n);
    for (std::size_t i = 0; i < n; ++i) {
      mu[i] = 0.1 + uni(rng);
      nu[i] = 0.1 + uni(rng);
      for (std::size_t j = 0; j < n; ++j) {
        K[i][j] = uni(rng);
        w[i][j] = 0.2 + uni(rng);
      }
    }
    auto res = schur_discrete(K, w, mu, nu, p);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> f(n);
      for (auto &v : f) v = uni(rng) - 0.3;
      double nf = 0.0, nk = 0.0;
      for (std::size_t j = 0; j < n; ++j) nf += std::pow(std::abs(f[j]), p) * nu[j];
      for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += K[i][j] * f[j] * nu[j];
        nk += std::pow(std::abs(s), p) * mu[i];
      }
      CHECK(std::pow(nk / nf, 1.0 / p) <= res.bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("sharp Hardy constant") {
  for (int d : {3, 4}) {
    auto rep = sharp_hardy_check(d);
    CAPTURE(d);
    CHECK(rep.verdict == Verdict::pass);
    CHECK(rep.observed_min >= 0.99 * 0.25 * (d - 2) * (d - 2));
  }
}

TEST_CASE("Bernstein fit") {
  auto g = make_log_grid(1e-4, 1e3, 512, 3);
  auto ep = cached_plan(make_params(3, -0.25), 0, g);
  auto Ns = dyadic_range(-2, 2);
  CHECK_THROWS_AS(bernstein_fit(*ep, 1.1, 2.0, Ns), ParameterError);
  CHECK_THROWS_AS(bernstein_fit(*ep, 2.0, 6.0, Ns), ParameterError);
  CHECK_THROWS_AS(bernstein_fit(*ep, 3.0, 2.0, Ns), ParameterError);
  auto free = cached_plan(make_params(3, 0.0), 0, g);
  auto rep = bernstein_fit(*free, 2.0, 4.0, Ns);
  CHECK(rep.verdict == Verdict::pass);
  REQUIRE(rep.has_slope);
  CHECK(rep.slope == doctest::Approx(0.75).epsilon(0.05));
}
