#include "doctest.h"

#include "sqsum/evalnum.hpp"
#include "sqsum/poly.hpp"

#include <cmath>
#include <numbers>
#include <tr1/cmath>
#include <vector>

using namespace sqsum;

namespace {

// Independent oracle for c > 0 with m = n/c a positive integer:
//   S = (1+2cx)^(1-2m) sum_k C(m-1,k)^2 (cx)^(2k) (1+cx)^(2(m-1-k))
// (Euler's transformation of the diagonal 2F1), evaluated exactly.
Rational euler_oracle(unsigned m, const Rational& cx) {
  Rational sum(0);
  for (unsigned k = 0; k < m; ++k) {
    const Integer b = binomial(m - 1, k);
    sum += Rational(b * b) * pow(cx, 2 * k) * pow(Rational(1 + cx), 2 * (m - 1 - k));
  }
  return sum / pow(Rational(1 + 2 * cx), 2 * m - 1);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("hyp2f1 diagonal examples") {
  CHECK(hyp2f1_diag(7.3, 0.0) == 1.0);
  for (double z : {0.0, 0.5, 3.0, 10.0}) {
    CHECK(hyp2f1_diag(-1, z) == doctest::Approx(1 + z));
    CHECK(hyp2f1_diag(-2, z) == doctest::Approx(1 + 4 * z + z * z));
  }
  const Hyp2f1Result t = hyp2f1_diag_eval(-2, 0.3);
  CHECK(t.terms == 3u);
  CHECK(t.err_estimate <= 1e-14);
  CHECK_THROWS_AS(hyp2f1_diag(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(hyp2f1_diag(2.0, 1.5), DomainError);
  CHECK(hyp2f1_diag_eval(2.0, 0.999).beyond_switch);
}

TEST_CASE("hyp2f1 diagonal against libstdc++ hyperg") {
  for (double a : {0.25, 1.0, 2.5, 7.0}) {
    for (double z : {0.01, 0.2, 0.5, 0.8, 0.95}) {
      const double expected = std::tr1::hyperg(a, a, 1.0, z);
      CAPTURE(a);
      CAPTURE(z);
      CHECK(hyp2f1_diag(a, z) == doctest::Approx(expected).epsilon(1e-11));
    }
  }
}

TEST_CASE("bessel I0") {
  CHECK(bessel_i0(0.0) == 1.0);
  CHECK(bessel_i0(2.0) == doctest::Approx(2.2795853023360673).epsilon(1e-14));
  for (double z : {0.1, 1.0, 5.0, 20.0, 39.0, 41.0, 100.0, 700.0}) {
    CAPTURE(z);
    const double expected = std::cyl_bessel_i(0.0, z) * std::exp(-z);
    const BesselResult r = bessel_i0_scaled(z);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(r.value - expected) <= r.err_estimate + 1e-15 * expected);
  }
  CHECK(std::isfinite(bessel_i0_scaled(1e6).value));
  CHECK(std::exp(-2.0) * bessel_i0(2.0) ==
        doctest::Approx(s_closed(Params::make(Rational(1), Rational(0)), 1.0).value).epsilon(1e-14));
}

TEST_CASE("series examples") {
  for (const auto& c : {Rational(-1), Rational(0), Rational(1), Rational(5, 2)}) {
    const Params p = Params::make(Rational(5), c);
    CHECK(s_series(p, 0.0).value == 1.0);
    CHECK(s_closed(p, 0.0).value == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(s_series(Params::make(Rational(1), Rational(-1)), 0.25).value == doctest::Approx(0.625));
  CHECK(s_series(Params::make(Rational(1), Rational(1)), 0.5).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s_series(Params::make(Rational(1), Rational(1)), 0.5, 1e-15).value ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s_closed(Params::make(Rational(2), Rational(-1)), 0.5).value ==
        doctest::Approx(0.375).epsilon(1e-15));
  CHECK(s_closed(Params::make(Rational(1), Rational(1)), 0.5).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(s_series(Params::make(Rational(1), Rational(-1)), 1.5), DomainError);
  CHECK_THROWS_AS(s_closed(Params::make(Rational(1), Rational(1)), -0.5), DomainError);
}

TEST_CASE("quadrature examples") {
  const QuadratureRule r = QuadratureRule::make(QuadratureKind::ChebyshevOn01, 8);
  REQUIRE(r.nodes.size() == 8u);
  CHECK(r.weights[0] == doctest::Approx(std::numbers::pi / 8));
  for (double t : r.nodes) CHECK((t > 0.0 && t < 1.0));

  CHECK(s_quad(Params::make(Rational(1), Rational(-1)), 0.0, 2).value ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s_quad_fixed(Params::make(Rational(2), Rational(-1)), 0.5, 3) ==
        doctest::Approx(0.375).epsilon(1e-15));
  const double k = s_quad(Params::make(Rational(1), Rational(0)), 0.25).value;
  CHECK(k == doctest::Approx(std::exp(-0.5) * std::cyl_bessel_i(0.0, 0.5)).epsilon(1e-13));
  CHECK(k == doctest::Approx(0.6450353).epsilon(1e-7));
}

TEST_CASE("terminating exactness of quadrature for c = -1") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Params p = Params::make(Rational(n), Rational(-1));
    for (double x : {0.1, 0.3, 0.5, 0.77, 1.0}) {
      CHECK(rel(s_quad_fixed(p, x, n + 1), s_series(p, x).value) <= 1e-14);
    }
  }
}

TEST_CASE("Euler-transform oracle for c > 0") {
  for (unsigned m : {1u, 2u, 3u, 5u, 12u}) {
    for (const Rational c : {Rational(1), Rational(2), Rational(1, 2)}) {
      const Params p = Params::make(Rational(m) * c, c);
      for (const Rational x : {Rational(1, 10), Rational(1), Rational(7, 2), Rational(20)}) {
        const double expected = to_double(euler_oracle(m, c * x));
        const double xd = to_double(x);
        CAPTURE(p.to_string());
        CAPTURE(xd);
        CHECK(rel(s_series(p, xd).value, expected) <= 1e-12);
        CHECK(rel(s_closed(p, xd).value, expected) <= 1e-12);
        const EvalResult q = s_quad(p, xd);
        CHECK(std::abs(q.value - expected) <= q.err_estimate + 1e-14);
      }
    }
  }
  // closed forms quoted for n = 1, 2
  CHECK(s_closed(Params::make(Rational(2), Rational(1)), 1.0).value ==
        doctest::Approx(5.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("three-way agreement") {
  const std::vector<std::pair<Rational, Rational>> cases = {
      {Rational(3), Rational(-1)}, {Rational(2), Rational(-1, 2)}, {Rational(5), Rational(0)},
      {Rational(2), Rational(1)},  {Rational(1, 3), Rational(3)}};
  for (const auto& [n, c] : cases) {
    const Params p = Params::make(n, c);
    const double hi = p.domain().bounded() ? p.domain().hi : 20.0;
    for (int i = 0; i <= 40; ++i) {
      const double x = hi * i / 40.0;
      const EvalResult a = s_series(p, x);
      const EvalResult b = s_closed(p, x);
      const EvalResult q = s_quad(p, x);
      CAPTURE(p.to_string());
      CAPTURE(x);
      CHECK(rel(a.value, b.value) <= 1e-12);
      CHECK(std::abs(q.value - a.value) <= q.err_estimate + a.err_estimate + 1e-15);
      CHECK(a.value > 0.0);
      CHECK(a.value <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("kernel T") {
  CHECK(t_closed(Params::make(Rational(1), Rational(1)), 1.0, 0.0) == doctest::Approx(0.5));
  CHECK(t_closed(Params::make(Rational(2), Rational(0)), 0.3, 0.0) ==
        doctest::Approx(std::exp(-0.6)).epsilon(1e-14));
  CHECK(t_closed(Params::make(Rational(2), Rational(-1)), 0.5, 0.5) ==
        doctest::Approx(0.375).epsilon(1e-15));
  CHECK(t_quad(Params::make(Rational(1), Rational(1)), 0.0, 0.0, 8) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t_quad(Params::make(Rational(2), Rational(-1)), 0.5, 0.5, 16) ==
        doctest::Approx(0.375).epsilon(1e-12));
  const Params sz = Params::make(Rational(1), Rational(0));
  CHECK(t_quad(sz, 0.25, 0.25, 64) == doctest::Approx(s_quad(sz, 0.25).value).epsilon(1e-13));

  for (const auto& [n, c] : std::vector<std::pair<Rational, Rational>>{
           {Rational(4), Rational(-1)}, {Rational(3), Rational(0)}, {Rational(3), Rational(1)},
           {Rational(3), Rational(-3, 2)}}) {
    const Params p = Params::make(n, c);
    const double hi = p.domain().bounded() ? p.domain().hi : 5.0;
    for (double fx : {0.0, 0.1, 0.4, 0.9}) {
      for (double fy : {0.05, 0.5, 1.0}) {
        const double x = fx * hi;
        const double y = fy * hi;
        // direct sum of p_k(x) p_k(y)
        double direct = 0.0;
        for (unsigned k = 0; k < 400; ++k) direct += basis(p, k, x) * basis(p, k, y);
        CAPTURE(p.to_string());
        CAPTURE(x);
        CAPTURE(y);
        CHECK(rel(t_closed(p, x, y), direct) <= 1e-12);
        CHECK(rel(t_closed(p, x, y), t_closed(p, y, x)) <= 1e-14);
        CHECK(rel(t_quad(p, x, y, 256), direct) <= 1e-11);
      }
      CHECK(rel(t_closed(p, fx * hi, fx * hi), s_closed(p, fx * hi).value) <= 1e-13);
    }
  }
}

TEST_CASE("family_value routes through the substitution") {
  // U_1 = (1+x^2)/(1+x)^2, J_0 = (1-x)/(1+x)
  CHECK(family_value(FamilyId::bbh(), Rational(1), 1.0) == doctest::Approx(0.5));
  CHECK(family_value(FamilyId::bbh(), Rational(1), 3.0) == doctest::Approx(10.0 / 16.0));
  CHECK(family_value(FamilyId::mkz(), Rational(0), 0.5) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(family_value(FamilyId::mkz(), Rational(1), 1.0), DomainError);
}
