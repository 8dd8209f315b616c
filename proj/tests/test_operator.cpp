#include "doctest.h"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "isq/grids.hpp"
#include "isq/operator.hpp"

using namespace isq;

TEST_CASE("sigma and the exponents r0, r0'") {
  auto op = make_params(3, -0.25);
  CHECK(op.sigma() == doctest::Approx(0.5));
  CHECK(op.r0() == doctest::Approx(1.2));
  CHECK(op.r0_prime() == doctest::Approx(6.0));
  CHECK(op.at_endpoint());

  auto rep = make_params(3, 0.75);
  CHECK(rep.sigma() == doctest::Approx(-0.5));
  CHECK(std::isinf(rep.r0_prime()));
  CHECK(rep.r0() == doctest::Approx(3.0 / 3.5));

  auto free = make_params(5, 0.0);
  CHECK(free.sigma() == doctest::Approx(0.0));
  CHECK(free.endpoint() == doctest::Approx(-2.25));
  // nu_l = sqrt(((d-2)/2)^2 + a + l(l + d - 2)); a = 0 gives l + (d-2)/2
  for (int l : {0, 1, 4}) CHECK(free.nu(l) == doctest::Approx(l + 1.5));
  CHECK(sector_order(op, 2).nu == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_params(2, 0.0), ParameterError);
  CHECK_THROWS_AS(make_params(3, -0.3), ParameterError);
  CHECK_THROWS_AS(make_params(3, NAN), ParameterError);
  // round-off just below the endpoint snaps onto it
  CHECK(make_params(4, -1.0 - 1e-15).at_endpoint());
  CHECK(parse_coupling("endpoint", 4) == doctest::Approx(-1.0));
  CHECK(parse_coupling("0.5", 3) == doctest::Approx(0.5));
  CHECK(parse_coupling("-2e-1", 3) == doctest::Approx(-0.2));
  CHECK_THROWS_AS(parse_coupling("0.5x", 3), ParameterError);
  CHECK_THROWS_AS(parse_coupling("", 3), ParameterError);
  CHECK_THROWS_AS(parse_coupling("end", 3), ParameterError);
}

TEST_CASE("windows in 1/p") {
  auto op = make_params(3, -0.25);
  auto h = hardy_window(op, 1.0);
  CHECK(h.lo == doctest::Approx(0.5));
  CHECK(h.hi == doctest::Approx(5.0 / 6.0));
  CHECK(h.contains(0.6));
  CHECK_FALSE(h.contains(0.5));
  CHECK_FALSE(h.contains(0.5 + 1e-14));
  CHECK_FALSE(hardy_window(op, 2.5).valid); // d - s - 2 sigma <= 0

  auto fw = equivalence_forward_window(op, 1.5);
  CHECK(fw.lo == doctest::Approx(2.0 / 3.0));
  auto rv = equivalence_reverse_window(op, 1.5);
  CHECK(rv.lo == doctest::Approx(0.5));
  CHECK(rv.hi == doctest::Approx(5.0 / 6.0));
  CHECK_THROWS_AS(equivalence_forward_window(op, 2.0), ParameterError);

  auto sq = sqfn_difference_range(op, 1.0);
  CHECK(sq.lo == doctest::Approx(1.0)); // d / (d + s - sigma) < 1
  CHECK(sqfn_difference_range(make_params(3, -0.25), 0.2).lo == doctest::Approx(3.0 / 2.7));
  CHECK(sq.hi == doctest::Approx(6.0));
  CHECK(std::isinf(sqfn_difference_range(make_params(3, 1.0), 1.0).hi));

  CHECK(bernstein_admissible(op, 1.5, 3.0));
  CHECK_FALSE(bernstein_admissible(op, 1.1, 3.0));
  CHECK_FALSE(bernstein_admissible(op, 1.5, 6.0));
  CHECK_FALSE(bernstein_admissible(op, 3.0, 1.5));
  CHECK(bernstein_admissible(make_params(3, 0.0), 1.5, INFINITY));
}

TEST_CASE("smoothing order") {
  CHECK(smoothing_order(3) == 1);
  CHECK(smoothing_order(4) == 2);
  CHECK(smoothing_order(7) == 2);
  CHECK(smoothing_order(8) == 3);
}

TEST_CASE("Liouville form annihilates sqrt(r) J_nu(r) - that function") {
  auto g = make_log_grid(1e-2, 30.0, 1024, 3);
  for (double nu : {0.5, 1.0, 2.5}) {
    auto f = sample(g, [nu](double r) { return std::sqrt(r) * boost::math::cyl_bessel_j(nu, r); });
    auto lf = liouville_apply(g, f, nu);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.r[i] > 0.1 && g.r[i] < 20.0) worst = std::max(worst, std::abs(lf[i] - f[i]));
    CAPTURE(nu);
    CHECK(worst < 1e-6);
  }
  auto small = make_log_grid(1e-2, 30.0, 64, 3);
  CHECK_THROWS_AS(liouville_apply(small, sample(small, [](double r) { return r; }), 0.5), ParameterError);
}
