#pragma once

// Exact forms of the squared-basis sums and exact checks of the relations
// they satisfy.
//
//   F_n  Bernstein,  polynomial of degree 2n in x
//   G_n  Baskakov,   odd polynomial in u = 1/(1+2x)
//   J_n  MKZ,        odd polynomial in w = (1-x)/(1+x)
//   U_n  BBH,        even polynomial in (x-1)/(x+1)

#include "sqsum/core.hpp"
#include "sqsum/poly.hpp"

#include <stdexcept>
#include <string>

namespace sqsum {

/// No exact rational representation exists (or is implemented) for the request.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sum_k (C(n,k) x^k (1-x)^(n-k))^2 expanded in x. F_0 = 1.
RationalPoly f_poly_direct(unsigned n);

/// F_n as an even polynomial in s = x - 1/2 with coefficients
/// 4^-n C(2n,n) 4^k C(n,k)^2 / C(2n,2k) on s^(2k).
RationalPoly f_poly_parseval(unsigned n);

/// Rewrites a polynomial in s = x - 1/2 as a polynomial in x.
RationalPoly s_to_x(const RationalPoly& in_s);

/// Residual polynomials of the three F_n relations, given F_{n-1}, F_n, F_{n+1}:
///   three_term:        2(n+1)F_{n+1} - (2n+1)(1+(1-2x)^2)F_n + 2n(1-2x)^2 F_{n-1}
///   mixed_derivative:  (1-2x)(F'_{n+1} - (1-2x(1-x))F'_n)
///                        - 2(n+2x(1-x))F_n + 2(n+1)F_{n+1}
///   derivative_gap:    F'_{n+1} - (1-2x)^2 F'_{n-1}
///                        - 2(1-2x)((2n-1)F_{n-1} - (2n+1)F_n)
struct RecurrenceResiduals {
  RationalPoly three_term;
  RationalPoly mixed_derivative;
  RationalPoly derivative_gap;

  bool all_zero() const {
    return three_term.is_zero() && mixed_derivative.is_zero() && derivative_gap.is_zero();
  }
};

RecurrenceResiduals recurrence_residuals(unsigned n, const RationalPoly& f_prev,
                                         const RationalPoly& f, const RationalPoly& f_next);

/// All three relations hold exactly for the true F_{n-1}, F_n, F_{n+1}.
bool recurrence_check(unsigned n);

/// Second-order linear ODE  a2(x) y'' + a1(x) y' + a0(x) y = 0  with
/// polynomial coefficients.
struct Ode {
  enum class Kind { S, F, G, J, U };

  Kind kind = Kind::S;
  std::string label;
  RationalPoly a2;
  RationalPoly a1;
  RationalPoly a0;

  /// x(1+cx)(1+2cx) y'' + (4(n+c)x(1+cx)+1) y' + 2n(1+2cx) y = 0
  static Ode eq_s(const Params& params);
  /// x(1-x)(1-2x) y'' + (1+4(n-1)x(1-x)) y' + 2n(1-2x) y = 0
  static Ode eq_f(unsigned n);
  /// x(1+x)(1+2x) y'' + (4(n+1)x(1+x)+1) y' + 2n(1+2x) y = 0
  static Ode eq_g(unsigned n);
  /// x(1+x)(1-x)^2 y'' - (1-x)(x^2-4(n+1)x-1) y' + 2(n+1)(1+x) y = 0
  static Ode eq_j(unsigned n);
  /// x(1-x)(1+x)^2 y'' + (1+x)(1+4nx-x^2) y' + 2n(1-x) y = 0
  static Ode eq_u(unsigned n);
};

/// Exact residual a2 y'' + a1 y' + a0 y; the zero function iff y solves the ODE.
RationalFn ode_residual_poly(const RationalFn& y, const Ode& ode);

/// Heun equation with singular points 0, 1, 1/2:
///   y'' + (gamma/x + delta/(x-1) + epsilon/(x-1/2)) y'
///       + (alpha beta x - q) / (x (x-1) (x-1/2)) y = 0
struct HeunParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  Rational epsilon;
  Rational q;

  /// alpha = gamma = delta = 1, beta = epsilon = 2n/c, q = n/c (c != 0).
  static HeunParams for_operator(const Params& params);

  bool operator==(const HeunParams& other) const = default;

  /// Throws std::invalid_argument unless alpha + beta + 1 = gamma + delta + epsilon.
  void validate() const;
};

/// Argument map applied before the Heun operator: y(x) -> y(scale * x).
struct ArgTransform {
  Rational scale{1};

  static ArgTransform none() { return {Rational(1)}; }
  static ArgTransform negate_arg() { return {Rational(-1)}; }
  /// H_{n,c}(x) = S_{n,c}(-x/c).
  static ArgTransform for_operator(const Params& params);
};

/// Residual of the Heun equation for y(scale * x), multiplied through by
/// x(x-1)(x-1/2); the zero function iff y(scale * x) solves it.
RationalFn heun_residual(const RationalFn& y, const HeunParams& hp,
                         const ArgTransform& transform = ArgTransform::none());

/// G_n as an odd polynomial in u. The coefficient of u^(2k+1) is
/// 4^(1-n) (2k)! (2n-2k-2)! / ((k!)^2 ((n-k-1)!)^2).
RationalPoly g_poly_in_u(unsigned n);
RationalFn g_rational(unsigned n);

/// J_n as an odd polynomial in w; coefficient of w^(2k+1) is
/// 4^-n (2k)! (2n-2k)! / ((k!)^2 ((n-k)!)^2).
RationalPoly j_poly_in_w(unsigned n);
RationalFn j_rational(unsigned n);

/// U_n from its even series in (x-1)/(x+1) (written in w, since only even
/// powers occur).
RationalFn u_rational_series(unsigned n);
/// U_n as F_n(x/(1+x)) through the s-form of F_n.
RationalFn u_rational_from_parseval(unsigned n);
/// U_n; throws std::logic_error if the two constructions above disagree.
RationalFn u_rational(unsigned n);

/// Exact S for families with a rational closed form: Bernstein (F_n),
/// Baskakov (G_n), BBH (U_n), MKZ (J_n), and General with c < 0
/// (F_l(-c x)). Throws UnsupportedError otherwise.
RationalFn exact_family_function(const FamilyId& family, const Rational& n);

}  // namespace sqsum
