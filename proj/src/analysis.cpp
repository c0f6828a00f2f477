#include "sqsum/analysis.hpp"

#include "sqsum/evalnum.hpp"
#include "sqsum/exactalg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace sqsum {

namespace {

// Function values for finite differences should carry full double accuracy.
constexpr double kFdRtol = 1e-16;

double s_accurate(const Params& params, double x) { return s_closed(params, x, kFdRtol).value; }

struct Derivatives {
  double y = 0.0;
  double dy = 0.0;
  double d2y = 0.0;
};

template <class F>
Derivatives central(const F& f, double x, double h, Stencil stencil) {
  const double f0 = f(x);
  const double fp = f(x + h);
  const double fm = f(x - h);
  if (stencil == Stencil::ThreePoint) {
    return {f0, (fp - fm) / (2 * h), (fp - 2 * f0 + fm) / (h * h)};
  }
  const double fp2 = f(x + 2 * h);
  const double fm2 = f(x - 2 * h);
  return {f0, (-fp2 + 8 * fp - 8 * fm + fm2) / (12 * h),
          (-fp2 + 16 * fp - 30 * f0 + 16 * fm - fm2) / (12 * h * h)};
}

// One-sided, second order; dir = +1 forward, -1 backward.
template <class F>
Derivatives one_sided(const F& f, double x, double h, int dir) {
  const double s = dir * h;
  const double f0 = f(x);
  const double f1 = f(x + s);
  const double f2 = f(x + 2 * s);
  const double f3 = f(x + 3 * s);
  return {f0, (-3 * f0 + 4 * f1 - f2) / (2 * s), (2 * f0 - 5 * f1 + 4 * f2 - f3) / (h * h)};
}

double domain_hi(const Interval& dom) { return dom.bounded() ? dom.hi : HUGE_VAL; }

}  // namespace

std::string to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::OdeResidual: return "ode";
    case ScanKind::Convexity: return "convexity";
    case ScanKind::Monotonicity: return "monotonicity";
    case ScanKind::LogConvexity: return "logconvexity";
  }
  return "ode";
}

void ScanReport::summarize() {
  if (margins.empty()) {
    min_margin = max_margin = std::numeric_limits<double>::quiet_NaN();
    argmin = argmax = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  const auto [lo, hi] = std::minmax_element(margins.begin(), margins.end());
  min_margin = *lo;
  max_margin = *hi;
  argmin = grid[static_cast<std::size_t>(lo - margins.begin())];
  argmax = grid[static_cast<std::size_t>(hi - margins.begin())];
}

ScanReport ode_residual_scan(const Params& params, const std::vector<double>& grid,
                             const OdeScanOptions& options) {
  const Interval dom = params.domain();
  const double n = params.n();
  const double c = params.c();
  ScanReport r;
  r.kind = ScanKind::OdeResidual;
  r.label = params.to_string();
  r.tolerance = options.tolerance;
  r.notes.push_back(options.stencil == Stencil::FivePoint ? "stencil: 5-point" : "stencil: 3-point");
  const auto f = [&params](double t) { return s_accurate(params, t); };

  for (double x : grid) {
    const double h = options.h > 0 ? options.h : std::max(1e-4, 1e-4 * x);
    if (x - 2 * h < dom.lo || x + 2 * h > domain_hi(dom) || (dom.open_right && x + 2 * h >= dom.hi)) {
      throw DomainError(fmt::format("x = {} is within 2h = {} of the boundary of I_c = {}", x, 2 * h,
                                    dom.to_string()));
    }
    const Derivatives d = central(f, x, h, options.stencil);
    const double a2 = x * (1 + c * x) * (1 + 2 * c * x);
    const double a1 = 4 * (n + c) * x * (1 + c * x) + 1;
    const double a0 = 2 * n * (1 + 2 * c * x);
    const double residual = a2 * d.d2y + a1 * d.dy + a0 * d.y;
    const double scale = std::abs(a2 * d.d2y) + std::abs(a1 * d.dy) + std::abs(a0 * d.y);
    const double margin = scale > 0 ? std::abs(residual) / scale : std::abs(residual);
    r.grid.push_back(x);
    r.margins.push_back(margin);
    if (margin > options.tolerance) r.violations.push_back({x, margin});
  }
  r.summarize();
  r.status = r.violations.empty() ? "pass" : "fail";
  return r;
}

EndpointSlope ode_endpoint_slope(const Params& params, double h) {
  const Derivatives d = one_sided([&params](double t) { return s_accurate(params, t); }, 0.0, h, 1);
  return {d.dy, -2 * params.n()};
}

std::vector<double> interior_grid(const FamilyId& family, const Rational& n, unsigned count) {
  const Interval dom = family.domain(n);
  const double hi = dom.bounded() ? dom.hi : 20.0;
  std::vector<double> grid;
  for (unsigned j = count; j-- > 0;) {
    const double c = std::cos(std::numbers::pi * (j + 0.5) / count);
    grid.push_back(dom.lo + (hi - dom.lo) * 0.5 * (1 - c));
  }
  return grid;
}

ScanReport convexity_scan(const FamilyId& family, const Rational& n, const std::vector<double>& grid,
                          double tolerance) {
  const Interval dom = family.domain(n);
  ScanReport r;
  r.kind = ScanKind::Convexity;
  r.label = fmt::format("{} n={}", family.name(), to_string(n));
  r.tolerance = tolerance;
  for (double x : grid) {
    if (!(x > dom.lo && x < dom.hi)) {
      throw DomainError(fmt::format("convexity scan needs interior points; x = {} is not inside {}", x,
                                    dom.to_string()));
    }
  }

  if (family.tag == Family::Bernstein) {
    if (!family.admits(n)) throw ParamError("Bernstein needs a positive integer n");
    const RationalPoly d2 = f_poly_parseval(static_cast<unsigned>(n.get_num().get_ui()))
                                .derivative()
                                .derivative();
    r.exact = true;
    for (double x : grid) {
      r.grid.push_back(x);
      r.margins.push_back(to_double(d2(Rational(to_rational(x) - Rational(1, 2)))));
    }
  } else {
    std::optional<RationalFn> exact;
    try {
      exact = exact_family_function(family, n);
      r.notes.push_back("values from the exact rational form");
    } catch (const UnsupportedError&) {
      r.notes.push_back("values from s_closed");
    }
    const auto f = [&](double t) {
      return exact ? to_double((*exact)(to_rational(t))) : family_value(family, n, t, kFdRtol);
    };
    for (double x : grid) {
      const double dist = std::min(x - dom.lo, domain_hi(dom) - x);
      const double h = std::min(0.01 * std::max(1.0, x), dist / 2);
      r.grid.push_back(x);
      r.margins.push_back((f(x + h) - 2 * f(x) + f(x - h)) / (h * h));
    }
  }
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    if (r.margins[i] < -tolerance) r.violations.push_back({r.grid[i], r.margins[i]});
  }
  r.summarize();
  r.status = r.violations.empty() ? "pass" : "fail";
  return r;
}

std::vector<Rational> conjecture_grid(const Params& params) {
  const Interval dom = params.domain();
  const Rational width = dom.bounded() ? Rational(-1 / params.c_exact()) : Rational(20);
  std::vector<Rational> grid;
  grid.reserve(1024);
  for (unsigned j = 1; j <= 512; ++j) grid.push_back(Rational(2 * j - 1, 1024) * width);
  constexpr long kDen = 1L << 20;
  for (unsigned j = 0; j < 512; ++j) {
    const double u = 0.5 * (1 - std::cos(std::numbers::pi * (j + 0.5) / 512));
    // odd numerators keep these apart from the uniform points
    const long k = 2 * static_cast<long>(std::floor(u * kDen / 2)) + 1;
    grid.push_back(Rational(k, kDen) * width);
  }
  for (Rational& x : grid) x.canonicalize();
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

ScanReport logconvexity_scan(const Params& params, const std::vector<Rational>& grid) {
  const Interval dom = params.domain();
  ScanReport r;
  r.kind = ScanKind::LogConvexity;
  r.label = params.to_string();
  r.status = "unproven";

  std::optional<RationalFn> exact;
  try {
    exact = exact_family_function(FamilyId::general(params.c_exact()), params.n_exact());
  } catch (const UnsupportedError&) {
  } catch (const ParamError&) {
  }

  if (exact) {
    r.exact = true;
    const RationalPoly& p = exact->num();
    const RationalPoly& q = exact->den();
    const RationalPoly p1 = p.derivative();
    const RationalPoly p2 = p1.derivative();
    const RationalPoly q1 = q.derivative();
    const RationalPoly q2 = q1.derivative();
    for (const Rational& x : grid) {
      const double xd = to_double(x);
      params.check_domain(xd);
      const Rational pv = p(x), p1v = p1(x), p2v = p2(x);
      const Rational qv = q(x), q1v = q1(x), q2v = q2(x);
      // q^4 Q = p (p'' q^2 - 2 p' q' q - p q'' q + 2 p q'^2) - (p' q - p q')^2
      const Rational inner = p2v * qv * qv - 2 * p1v * q1v * qv - pv * q2v * qv + 2 * pv * q1v * q1v;
      const Rational wr = p1v * qv - pv * q1v;
      const Rational q2sq = qv * qv;
      const Rational value = (pv * inner - wr * wr) / (q2sq * q2sq);
      r.grid.push_back(xd);
      r.margins.push_back(to_double(value));
    }
  } else {
    r.notes.push_back("finite differences of s_closed");
    const auto f = [&params](double t) { return s_accurate(params, t); };
    for (const Rational& xr : grid) {
      const double x = to_double(xr);
      params.check_domain(x);
      const double h = std::max(1e-3, 1e-3 * x);
      Derivatives d;
      if (x - 2 * h < dom.lo) {
        d = one_sided(f, x, h, 1);
      } else if (dom.bounded() && x + 2 * h > dom.hi) {
        d = one_sided(f, x, h, -1);
      } else {
        d = central(f, x, h, Stencil::FivePoint);
      }
      r.grid.push_back(x);
      r.margins.push_back(d.y * d.d2y - d.dy * d.dy);
    }
  }
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    if (r.margins[i] < 0) r.violations.push_back({r.grid[i], r.margins[i]});
  }
  r.summarize();
  return r;
}

ScanReport monotonicity_check(unsigned n, const std::vector<double>& grid, double tolerance) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("monotonicity check needs a sorted grid");
  }
  if (!grid.empty() && (grid.front() < 0.0 || grid.back() > 1.0)) {
    throw DomainError("monotonicity check needs a grid inside [0, 1]");
  }
  std::vector<Rational> points;
  points.reserve(grid.size() + 1);
  for (double x : grid) points.push_back(to_rational(x));
  const Rational half(1, 2);
  const auto pos = std::lower_bound(points.begin(), points.end(), half);
  if (pos == points.end() || *pos != half) points.insert(pos, half);
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const RationalPoly f = f_poly_direct(n);
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const Rational& x : points) values.push_back(f(x));

  ScanReport r;
  r.kind = ScanKind::Monotonicity;
  r.label = fmt::format("bernstein n={}", n);
  r.tolerance = tolerance;
  r.exact = true;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational diff = points[i + 1] <= half ? Rational(values[i] - values[i + 1])
                                                : Rational(values[i + 1] - values[i]);
    const double margin = to_double(diff);
    r.grid.push_back(to_double(points[i]));
    r.margins.push_back(margin);
    if (margin < -tolerance) r.violations.push_back({r.grid.back(), margin});
  }
  r.summarize();
  r.status = r.violations.empty() ? "pass" : "fail";
  return r;
}

}  // namespace sqsum
