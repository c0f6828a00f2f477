#pragma once

// Grid scans: finite-difference ODE residuals, convexity, monotonicity of
// F_n and the log-convexity margin Q = S S'' - S'^2.

#include "sqsum/core.hpp"

#include <string>
#include <vector>

namespace sqsum {

enum class ScanKind { OdeResidual, Convexity, Monotonicity, LogConvexity };
std::string to_string(ScanKind kind);

struct Violation {
  double x = 0.0;
  double margin = 0.0;
};

struct ScanReport {
  ScanKind kind = ScanKind::OdeResidual;
  std::string label;  // family or parameters
  std::vector<double> grid;
  std::vector<double> margins;
  double min_margin = 0.0;
  double argmin = 0.0;
  double max_margin = 0.0;
  double argmax = 0.0;
  double tolerance = 0.0;
  std::vector<Violation> violations;
  std::string status;  // "pass", "fail", or "unproven" for log-convexity
  bool exact = false;  // margins rounded from exact rational values
  std::vector<std::string> notes;

  /// Fills min/max and their arguments from grid and margins.
  void summarize();
};

enum class Stencil { ThreePoint, FivePoint };

struct OdeScanOptions {
  double h = 0.0;  // 0: max(1e-4, 1e-4 x) per point
  Stencil stencil = Stencil::FivePoint;
  double tolerance = 1e-5;
};

/// Residual of x(1+cx)(1+2cx)y'' + (4(n+c)x(1+cx)+1)y' + 2n(1+2cx)y with
/// derivatives of s_closed by central differences. Margins are |residual|
/// divided by |a2 y''| + |a1 y'| + |a0 y|; a violation is a margin above the
/// tolerance. Every grid point must keep a 2h collar inside the domain
/// (DomainError otherwise).
ScanReport ode_residual_scan(const Params& params, const std::vector<double>& grid,
                             const OdeScanOptions& options = {});

struct EndpointSlope {
  double slope = 0.0;     // one-sided second-order difference of s_closed at 0
  double expected = 0.0;  // -2n, the limit of the ODE at x = 0
};

EndpointSlope ode_endpoint_slope(const Params& params, double h = 1e-4);

/// Second derivative samples of the family's S at interior grid points.
/// Bernstein: exact values of F_n'' from its s-form. Other families: second
/// central differences with h = min(0.01 max(1, x), distance to the boundary / 2).
/// Violations are margins below -tolerance.
ScanReport convexity_scan(const FamilyId& family, const Rational& n, const std::vector<double>& grid,
                          double tolerance = 1e-8);

/// Q = S S'' - S'^2 on the grid. Exact (rational evaluation at the given
/// points) when S has an exact form, i.e. c = 1 or c < 0; finite differences
/// of s_closed otherwise. Status is always "unproven".
ScanReport logconvexity_scan(const Params& params, const std::vector<Rational>& grid);

/// 1024 rational points: 512 at odd multiples of 1/1024 of the domain and 512
/// Chebyshev points moved to an odd multiple of 2^-20 of it (within 2^-20).
/// Unbounded domains use [0, 20].
std::vector<Rational> conjecture_grid(const Params& params);

/// Successive differences of F_n on a sorted grid in [0, 1] (1/2 is inserted
/// if absent): F_n(x_i) - F_n(x_{i+1}) on [0, 1/2], F_n(x_{i+1}) - F_n(x_i)
/// on [1/2, 1]. grid[i] of the report is the left point of pair i.
ScanReport monotonicity_check(unsigned n, const std::vector<double>& grid, double tolerance = 1e-14);

/// Interior Chebyshev points of the family's domain (capped at 20).
std::vector<double> interior_grid(const FamilyId& family, const Rational& n, unsigned count);

}  // namespace sqsum
