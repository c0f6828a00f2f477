#pragma once

// Numerical routes to S_{n,c}(x) and the kernel T_{n,c}(x, y):
//
//   series      sum_k p_{n,k}(x)^2
//   closed form (1+cx)^{-2n/c} 2F1(n/c, n/c; 1; (cx/(1+cx))^2),  c != 0
//               exp(-2nx) I0(2nx),                                c == 0
//   quadrature  (1/pi) int_0^1 (t + (1-t)(1+2cx)^2)^{-n/c} dt/sqrt(t(1-t)),
//               (1/pi) int_{-1}^1 exp(-2nx(1+t)) dt/sqrt(1-t^2)
//
// The three routes share no code below the Params layer, so their agreement
// is a meaningful check.

#include "sqsum/core.hpp"

#include <string>
#include <vector>

namespace sqsum {

enum class Method { Series, ClosedForm, Quadrature };

std::string to_string(Method method);

struct EvalResult {
  double value = 0.0;
  Method method = Method::Series;
  double err_estimate = 0.0;  // claimed bound on truncation / quadrature error
  unsigned terms_or_nodes = 0;
};

/// Default relative tolerance of every numerical route.
inline constexpr double kDefaultRtol = 1e-12;

/// Beyond this argument the 2F1 series needs more than ~1e4 terms and the
/// closed-form route hands over to quadrature.
inline constexpr double kHyp2f1Switch = 0.995;

/// Quadrature ladder limits (node counts double from the starting m).
inline constexpr unsigned kQuadMaxNodes = 4096;
inline constexpr unsigned kQuadMaxNodesDelegated = 1u << 16;

enum class QuadratureKind { ChebyshevOn01, ChebyshevOnM11 };

/// Gauss-Chebyshev rule. On [0,1] it integrates against 1/sqrt(t(1-t)),
/// on [-1,1] against 1/sqrt(1-t^2); in both cases every weight is pi/m.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadratureKind kind = QuadratureKind::ChebyshevOn01;

  static QuadratureRule make(QuadratureKind kind, unsigned m);
};

struct Hyp2f1Result {
  double value = 0.0;
  double err_estimate = 0.0;
  unsigned terms = 0;
  bool beyond_switch = false;  // z > kHyp2f1Switch on a non-terminating series
};

/// 2F1(a, a; 1; z) = sum_k ((a)_k / k!)^2 z^k. Terminates for a in
/// {0, -1, -2, ...} (any z >= 0); otherwise requires 0 <= z < 1 and throws
/// DomainError on divergence.
Hyp2f1Result hyp2f1_diag_eval(double a, double z, double rtol = kDefaultRtol);
double hyp2f1_diag(double a, double z);

/// Modified Bessel I0 by its power series; +inf once it overflows.
double bessel_i0(double z);

/// exp(-z) I0(z): power series for moderate z, Hankel expansion for large z.
struct BesselResult {
  double value = 0.0;
  double err_estimate = 0.0;
  unsigned terms = 0;
};
BesselResult bessel_i0_scaled(double z);

EvalResult s_series(const Params& params, double x, double rtol = kDefaultRtol);
EvalResult s_closed(const Params& params, double x, double rtol = kDefaultRtol);

/// Adaptive Gauss-Chebyshev: starts at m nodes and doubles until successive
/// levels differ by less than max(1e-13, rtol * value) or max_nodes is hit.
EvalResult s_quad(const Params& params, double x, unsigned m = 16, double rtol = kDefaultRtol,
                  unsigned max_nodes = kQuadMaxNodes);

/// Single application of the m-node rule (no adaptivity).
double s_quad_fixed(const Params& params, double x, unsigned m);

double t_closed(const Params& params, double x, double y);
double t_quad(const Params& params, double x, double y, unsigned m);

/// Value of the family's squared-basis sum (F_n, K_n, G_n, U_n, J_n, or
/// S_{n,c}) at x in the family's own variable, via s_closed.
double family_value(const FamilyId& family, const Rational& n, double x,
                    double rtol = kDefaultRtol);

}  // namespace sqsum
