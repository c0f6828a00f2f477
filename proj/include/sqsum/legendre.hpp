#pragma once

// Legendre polynomials and their link with F_n through
//   t = (2x^2 - 2x + 1)/(1 - 2x),   F_n(x) = (t - sqrt(t^2 - 1))^n P_n(t).

#include "sqsum/poly.hpp"
#include "sqsum/rational.hpp"

#include <span>

namespace sqsum {

/// P_n(t) by the three-term recurrence from P_0 = 1, P_1 = t. Exact for Rational.
template <class T>
T legendre_p(unsigned n, const T& t) {
  if (n == 0) return T(1);
  T prev(1);
  T cur(t);
  for (unsigned k = 1; k < n; ++k) {
    T next = (T(2 * k + 1) * t * cur - T(k) * prev) / T(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// P_n as a polynomial in t.
RationalPoly legendre_poly(unsigned n);

/// 2^-n sum_k C(n,k)^2 (t+1)^k (t-1)^(n-k).
Rational legendre_from_binom(unsigned n, const Rational& t);

/// Points of the map between x in [0, 1/2) and t in [1, inf).
struct LegendreMap {
  double x = 0.0;
  double t = 1.0;
  double dxdt = 0.0;  // (1-2x)^2 / (4x(1-x)); infinite at x = 0

  /// Throws DomainError for x outside [0, 1/2 - 1e-8].
  static LegendreMap from_x(double x);
  /// Throws DomainError for t < 1.
  static LegendreMap from_t(double t);
};

inline constexpr double kLegendreMapCutoff = 0.5 - 1e-8;

/// t(x) = (2x^2 - 2x + 1)/(1 - 2x) for rational x != 1/2.
Rational legendre_t_of_x(const Rational& x);

struct NeuschelResidual {
  double f_value = 0.0;   // F_n(x) by direct summation
  double residual = 0.0;  // F_n(x) - (t - sqrt(t^2-1))^n P_n(t)
  double inverse_residual = 0.0;  // P_n(t) - (1-2x)^-n F_n(x), relative to P_n(t)
};

/// Floating-point check at x in [0, 1/2 - 1e-8]; DomainError beyond.
NeuschelResidual neuschel_check(unsigned n, double x);

/// Exact check at rational x in [0, 1/2): F_n(x) == (1-2x)^n P_n(t(x)).
bool neuschel_check_exact(unsigned n, const Rational& x);

/// Checks, exactly, with P_k taken from `custom` when it is non-empty
/// (custom[k] = P_k for k = 0..n+1) and the true Legendre polynomials otherwise:
///   (n+1)P_{n+1}(t) - (2n+1) t P_n(t) + n P_{n-1}(t) = 0
///   P'_{n+1}(t) - t P'_n(t) = (n+1) P_n(t)
///   P'_{n+1}(t) - P'_{n-1}(t) = (2n+1) P_n(t)
/// and, as an identity of rational functions of x,
///   P'_n(t(x)) = (1-2x)^(1-n) / (4x(1-x)) * ((1-2x) F'_n(x) + 2n F_n(x)).
bool derivative_relations_check(unsigned n, const Rational& t,
                                std::span<const RationalPoly> custom = {});

/// 4^-n C(2n,n) sum_k C(n,k)^2 / C(2n,2k) cos((n-2k) theta).
double cosine_rep(unsigned n, double theta);

}  // namespace sqsum
