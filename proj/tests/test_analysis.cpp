#include "doctest.h"

#include "sqsum/analysis.hpp"
#include "sqsum/exactalg.hpp"

#include <cmath>

using namespace sqsum;

namespace {
std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(a + (b - a) * i / (count - 1));
  return out;
}
}  // namespace

TEST_CASE("ODE residual scan examples") {
  OdeScanOptions opt;
  opt.h = 1e-3;
  const ScanReport r = ode_residual_scan(Params::make(Rational(2), Rational(1)), linspace(0.1, 5, 50), opt);
  CHECK(r.margins.size() == r.grid.size());
  CHECK(r.max_margin < 1e-5);
  CHECK(r.status == "pass");

  const ScanReport f = ode_residual_scan(Params::make(Rational(1), Rational(-1)), {0.3}, opt);
  CHECK(f.max_margin < 1e-8);
  // exact oracle: the residual of F_1 vanishes identically
  CHECK(ode_residual_poly(RationalFn(f_poly_direct(1)), Ode::eq_f(1)).is_zero());

  const EndpointSlope s = ode_endpoint_slope(Params::make(Rational(1), Rational(0)));
  CHECK(s.expected == -2.0);
  CHECK(std::abs(s.slope - s.expected) < 1e-4);
  for (const auto& c : {Rational(-1), Rational(1, 2), Rational(3)}) {
    const EndpointSlope e = ode_endpoint_slope(Params::make(Rational(3), c));
    CHECK(std::abs(e.slope - e.expected) < 1e-3 * std::abs(e.expected));
  }
}

TEST_CASE("ODE residual scan rejects points near the boundary") {
  OdeScanOptions opt;
  opt.h = 1e-2;
  CHECK_THROWS_AS(ode_residual_scan(Params::make(Rational(1), Rational(0)), {0.015}, opt), DomainError);
  CHECK_THROWS_AS(ode_residual_scan(Params::make(Rational(2), Rational(-1)), {0.99}, opt), DomainError);
  CHECK_NOTHROW(ode_residual_scan(Params::make(Rational(2), Rational(-1)), {0.5}, opt));
}

TEST_CASE("3-point residual is second order, 5-point is fourth order") {
  const std::vector<double> grid = linspace(0.25, 4, 16);
  for (const auto& c : {Rational(1, 2), Rational(2), Rational(0)}) {
    const Params p = Params::make(Rational(5), c);
    double prev3 = 0;
    double prev5 = 0;
    for (double h : {1e-2, 5e-3}) {
      OdeScanOptions o3{h, Stencil::ThreePoint, 1.0};
      OdeScanOptions o5{h, Stencil::FivePoint, 1.0};
      const double m3 = ode_residual_scan(p, grid, o3).max_margin;
      const double m5 = ode_residual_scan(p, grid, o5).max_margin;
      if (prev3 > 0) {
        CHECK(prev3 / m3 == doctest::Approx(4.0).epsilon(0.05));
        CHECK(prev5 / m5 == doctest::Approx(16.0).epsilon(0.1));
      }
      prev3 = m3;
      prev5 = m5;
    }
  }
}

TEST_CASE("convexity scan") {
  const ScanReport b = convexity_scan(FamilyId::bernstein(), Rational(1), linspace(0.05, 0.95, 19));
  CHECK(b.exact);
  for (double m : b.margins) CHECK(m == 4.0);

  const ScanReport k = convexity_scan(FamilyId::szasz(), Rational(1), linspace(0.01, 3, 60));
  CHECK(k.min_margin >= -1e-8);

  const auto grid = linspace(0.05, 0.95, 19);
  const ScanReport j = convexity_scan(FamilyId::mkz(), Rational(0), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    CHECK(j.margins[i] == doctest::Approx(4 / std::pow(1 + x, 3)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(convexity_scan(FamilyId::mkz(), Rational(0), {0.0}), DomainError);

  for (const FamilyId& f : {FamilyId::szasz(), FamilyId::baskakov(), FamilyId::mkz()}) {
    for (unsigned n = f.tag == Family::MKZ ? 0 : 1; n <= 6; ++n) {
      const ScanReport r = convexity_scan(f, Rational(n), interior_grid(f, Rational(n), 128));
      CAPTURE(r.label);
      CHECK(r.min_margin >= -1e-8);
      CHECK(r.violations.empty());
    }
  }
}

TEST_CASE("log-convexity scan") {
  const Params f1 = Params::make(Rational(1), Rational(-1));
  const ScanReport q = logconvexity_scan(f1, {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)});
  CHECK(q.exact);
  CHECK(q.status == "unproven");
  CHECK(q.margins[0] == 0.0);
  CHECK(q.margins[1] == doctest::Approx(2 - 8 * 0.0625));
  CHECK(q.margins[2] == 2.0);
  CHECK(q.margins[3] == 0.0);

  const ScanReport g = logconvexity_scan(Params::make(Rational(1), Rational(1)),
                                         {Rational(0), Rational(1, 2), Rational(3)});
  CHECK(g.margins[1] == doctest::Approx(4 / std::pow(2.0, 4)));
  CHECK(g.margins[2] == doctest::Approx(4 / std::pow(7.0, 4)));

  // finite-difference route, including the endpoint x = 0
  const ScanReport k = logconvexity_scan(Params::make(Rational(2), Rational(0)),
                                         {Rational(0), Rational(1, 2), Rational(2)});
  CHECK_FALSE(k.exact);
  CHECK(k.margins.size() == 3u);
  CHECK(k.status == "unproven");
}

TEST_CASE("conjecture grid") {
  const auto g = conjecture_grid(Params::make(Rational(3), Rational(-1)));
  CHECK(g.size() == 1024u);
  CHECK(g.front() > 0);
  CHECK(g.back() < 1);
  const auto h = conjecture_grid(Params::make(Rational(3), Rational(1)));
  CHECK(h.size() == 1024u);
  CHECK(h.back() < 20);
}

TEST_CASE("monotonicity of F_n") {
  std::vector<double> grid;
  for (int i = 0; i <= 64; ++i) grid.push_back(i / 64.0);
  const ScanReport r1 = monotonicity_check(1, grid);
  CHECK(r1.violations.empty());
  CHECK(r1.min_margin > 0);
  for (unsigned n = 1; n <= 12; ++n) {
    const ScanReport r = monotonicity_check(n, grid);
    CHECK(r.status == "pass");
    const std::size_t m = r.margins.size();
    for (std::size_t i = 0; i < m / 2; ++i) CHECK(r.margins[i] == r.margins[m - 1 - i]);
  }
  // 1/2 is inserted when missing
  const ScanReport odd = monotonicity_check(2, {0.0, 0.3, 0.7, 1.0});
  CHECK(odd.grid.size() == 4u);
  CHECK(odd.grid[2] == 0.5);
  CHECK_THROWS(monotonicity_check(2, {0.5, 0.2}));
}
