#include "doctest.h"

#include "sqsum/core.hpp"
#include "sqsum/exactalg.hpp"
#include "sqsum/legendre.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace sqsum;

TEST_CASE("recurrence seeds and small cases") {
  CHECK(legendre_p(0, 0.3) == 1.0);
  CHECK(legendre_p(1, 0.3) == 0.3);
  for (unsigned n = 0; n < 20; ++n) CHECK(legendre_p(n, Rational(1)) == 1);
  for (double t : {-0.7, 0.0, 0.4, 1.25, 3.0}) {
    CHECK(legendre_p(2, t) == doctest::Approx((3 * t * t - 1) / 2));
    CHECK(legendre_p(5, t) == doctest::Approx(std::legendre(5, t)).epsilon(1e-13));
  }
  CHECK(legendre_p(2, Rational(5, 4)) == Rational(59, 32));
  CHECK(legendre_poly(2) ==
        RationalPoly({Rational(-1, 2), Rational(0), Rational(3, 2)}, Variable::T));
}

TEST_CASE("binomial form agrees with the recurrence") {
  CHECK(legendre_from_binom(2, Rational(1)) == 1);
  CHECK(legendre_from_binom(2, Rational(5, 4)) == Rational(59, 32));
  CHECK(legendre_from_binom(3, Rational(0)) == 0);
  for (unsigned n = 0; n <= 25; ++n) {
    for (const Rational t : {Rational(0), Rational(1, 3), Rational(-2, 7), Rational(5, 4), Rational(9)}) {
      CHECK(legendre_from_binom(n, t) == legendre_p(n, t));
      CHECK(legendre_poly(n)(t) == legendre_p(n, t));
    }
  }
}

TEST_CASE("map round trip and consistency") {
  for (int i = 0; i <= 90; ++i) {
    const double x = 0.45 * i / 90.0;
    const LegendreMap m = LegendreMap::from_x(x);
    const LegendreMap back = LegendreMap::from_t(m.t);
    CAPTURE(x);
    CHECK(std::abs(back.x - x) <= 1e-13);
    CHECK(m.t - std::sqrt(m.t * m.t - 1) == doctest::Approx(1 - 2 * x).epsilon(1e-12));
    if (x > 0.0) {
      CHECK(m.dxdt == doctest::Approx(back.dxdt).epsilon(1e-10));
      // derivative against a central difference of x(t)
      const double h = 1e-4 * (m.t - 1);
      const double fd = (LegendreMap::from_t(m.t + h).x - LegendreMap::from_t(m.t - h).x) / (2 * h);
      CHECK(fd == doctest::Approx(m.dxdt).epsilon(1e-6));
    }
  }
  CHECK_THROWS_AS(LegendreMap::from_x(0.5), DomainError);
  CHECK_THROWS_AS(LegendreMap::from_x(0.5 - 1e-9), DomainError);
  CHECK_THROWS_AS(LegendreMap::from_t(0.5), DomainError);
}

TEST_CASE("bridge examples") {
  CHECK(neuschel_check(3, 0.0).residual == 0.0);
  const NeuschelResidual r1 = neuschel_check(1, 0.25);
  CHECK(r1.f_value == doctest::Approx(0.625));
  CHECK(std::abs(r1.residual) <= 1e-15);
  const NeuschelResidual r2 = neuschel_check(2, 0.25);
  CHECK(r2.f_value == doctest::Approx(0.4609375));
  CHECK(legendre_p(2, 1.25) == doctest::Approx(1.84375));
  CHECK(std::abs(r2.residual) <= 1e-15);
  CHECK_THROWS_AS(neuschel_check(2, 0.49999999999), DomainError);
}

TEST_CASE("bridge on a grid") {
  for (unsigned n = 1; n <= 30; ++n) {
    for (int i = 0; i < 64; ++i) {
      const double x = 0.45 * i / 63.0;
      const NeuschelResidual r = neuschel_check(n, x);
      CHECK(std::abs(r.residual) <= 1e-12 * r.f_value);
      CHECK(std::abs(r.inverse_residual) <= 1e-12);
    }
    for (const Rational x : {Rational(0), Rational(1, 10), Rational(1, 4), Rational(9, 20), Rational(49, 100)}) {
      CHECK(neuschel_check_exact(n, x));
    }
  }
  CHECK_THROWS_AS(neuschel_check_exact(2, Rational(1, 2)), DomainError);
}

TEST_CASE("derivative relations") {
  // hand values at n = 1, t = 2
  CHECK(legendre_poly(2).derivative()(Rational(2)) == 6);
  for (unsigned n = 1; n <= 15; ++n) {
    for (const Rational t : {Rational(2), Rational(5, 4), Rational(17, 3)}) {
      CHECK(derivative_relations_check(n, t));
    }
  }
  std::vector<RationalPoly> faulty = {legendre_poly(0), legendre_poly(1), legendre_poly(2)};
  faulty[2] = faulty[2] + RationalPoly::constant(Rational(1), Variable::T);
  CHECK_FALSE(derivative_relations_check(1, Rational(2), faulty));
  std::vector<RationalPoly> honest = {legendre_poly(0), legendre_poly(1), legendre_poly(2)};
  CHECK(derivative_relations_check(1, Rational(2), honest));
  CHECK_THROWS(derivative_relations_check(2, Rational(2), honest));
}

TEST_CASE("cosine representation") {
  for (double theta : {0.1, 0.7, 1.2, 1.5}) {
    CHECK(cosine_rep(1, theta) == doctest::Approx(std::cos(theta)).epsilon(1e-15));
    for (unsigned n = 0; n <= 25; ++n) {
      CHECK(cosine_rep(n, theta) == doctest::Approx(legendre_p(n, std::cos(theta))).epsilon(1e-12));
    }
  }
  CHECK(cosine_rep(2, std::numbers::pi / 3) == doctest::Approx(-0.125).epsilon(1e-14));
  for (unsigned n = 0; n <= 20; ++n) CHECK(cosine_rep(n, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("F_n decreases on [0, 1/2]") {
  for (unsigned n = 1; n <= 20; ++n) {
    double prev = neuschel_check(n, 0.0).f_value;
    for (int i = 1; i <= 100; ++i) {
      const double x = 0.45 * i / 100.0;
      const double cur = neuschel_check(n, x).f_value;
      CHECK(cur <= prev + 1e-14);
      prev = cur;
    }
  }
}
