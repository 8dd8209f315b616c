#include "doctest.h"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>

#include "isq/grids.hpp"
#include "isq/specfun.hpp"

using namespace isq;

TEST_CASE("scaled I_nu agrees with boost") {
  for (double nu : {0.0, 0.5, 1.0, 2.3, 7.5, 40.0})
    for (double x : {1e-3, 0.1, 1.0, 5.0, 30.0, 200.0}) {
      const double ref = boost::math::cyl_bessel_i(nu, x) * std::exp(-x);
      if (ref < 1e-280) continue;
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(bessel_i_scaled(nu, x) == doctest::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("I_1/2 closed form, including arguments where I overflows") {
  for (double x : {0.01, 1.0, 10.0, 500.0, 1e4}) {
    // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
    const double log_ref = 0.5 * std::log(2.0 / (M_PI * x)) + x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
    CHECK(log_bessel_i(0.5, x) == doctest::Approx(log_ref).epsilon(1e-12));
  }
  CHECK(std::isinf(log_bessel_i(1.0, 0.0)));
  CHECK(bessel_i_scaled(0.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("large order stays consistent with the recurrence") {
  // I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu
  for (double nu : {50.5, 300.0, 2000.0}) {
    const double x = 0.7 * nu;
    const double lm = log_bessel_i(nu - 1.0, x), l0 = log_bessel_i(nu, x), lp = log_bessel_i(nu + 1.0, x);
    const double lhs = std::exp(lm - l0) - std::exp(lp - l0);
    CHECK(lhs == doctest::Approx(2.0 * nu / x).epsilon(1e-9));
  }
}

TEST_CASE("J_nu and gamma") {
  CHECK(bessel_j(0.0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-14));
  CHECK(bessel_j(2.5, 3.0) == doctest::Approx(boost::math::cyl_bessel_j(2.5, 3.0)).epsilon(1e-13));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)));
  CHECK(gamma_fn(-1.5) == doctest::Approx(4.0 * std::sqrt(M_PI) / 3.0));
  CHECK_THROWS_AS(gamma_fn(0.0), ParameterError);
  CHECK_THROWS_AS(gamma_fn(-3.0), ParameterError);
  CHECK(lgamma_fn(100.0) == doctest::Approx(std::lgamma(100.0)));
}

TEST_CASE("gegenbauer polynomials") {
  for (double t : {-0.9, -0.2, 0.0, 0.4, 1.0}) {
    CHECK(gegenbauer(0, 1.0, t) == doctest::Approx(1.0));
    CHECK(gegenbauer(2, 1.0, t) == doctest::Approx(4.0 * t * t - 1.0));
    CHECK(gegenbauer(3, 0.5, t) == doctest::Approx(0.5 * (5.0 * t * t * t - 3.0 * t)));
  }
  // C_n^lambda(1) = (2 lambda)_n / n!
  CHECK(gegenbauer(4, 1.5, 1.0) == doctest::Approx(3.0 * 4.0 * 5.0 * 6.0 / 24.0));
}

TEST_CASE("zonal harmonics") {
  for (int l : {0, 1, 2, 5, 12})
    for (double t : {-1.0, -0.3, 0.5, 1.0}) {
      const double ref = (2.0 * l + 1.0) / (4.0 * M_PI) * boost::math::legendre_p(l, t);
      CHECK(zonal_harmonic(l, 3, t) == doctest::Approx(ref).epsilon(1e-12).scale(1e-12));
    }
  // at cos = 1 the value is dim(H_l) / |S^{d-1}|; for d = 4 dim(H_l) = (l + 1)^2
  CHECK(zonal_harmonic(3, 4, 1.0) == doctest::Approx(16.0 / sphere_area(4)));
}
