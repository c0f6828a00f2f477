#include "sqsum/legendre.hpp"

#include "sqsum/core.hpp"
#include "sqsum/exactalg.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace sqsum {

RationalPoly legendre_poly(unsigned n) {
  const RationalPoly t = RationalPoly::linear(Rational(0), Rational(1), Variable::T);
  RationalPoly prev = RationalPoly::constant(Rational(1), Variable::T);
  if (n == 0) return prev;
  RationalPoly cur = t;
  for (unsigned k = 1; k < n; ++k) {
    RationalPoly next = Rational(2 * k + 1, k + 1) * (t * cur) - Rational(k, k + 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational legendre_from_binom(unsigned n, const Rational& t) {
  const Rational plus = t + 1;
  const Rational minus = t - 1;
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    sum += Rational(b * b) * pow(plus, k) * pow(minus, n - k);
  }
  return sum / pow(Rational(2), n);
}

LegendreMap LegendreMap::from_x(double x) {
  if (!(x >= 0.0 && x <= kLegendreMapCutoff)) {
    throw DomainError(fmt::format("x = {} outside [0, 1/2 - 1e-8] where the Legendre map is used", x));
  }
  LegendreMap m;
  m.x = x;
  m.t = (2 * x * x - 2 * x + 1) / (1 - 2 * x);
  const double d = 1 - 2 * x;
  m.dxdt = x == 0.0 ? HUGE_VAL : d * d / (4 * x * (1 - x));
  return m;
}

LegendreMap LegendreMap::from_t(double t) {
  if (!(t >= 1.0) || !std::isfinite(t)) {
    throw DomainError(fmt::format("t = {} outside [1, inf)", t));
  }
  // t - sqrt(t^2 - 1) = 1/(t + sqrt(t^2 - 1)) avoids cancellation for large t.
  const double root = std::sqrt((t - 1) * (t + 1));
  const double x = 0.5 * (1 - 1 / (t + root));
  LegendreMap m;
  m.x = x;
  m.t = t;
  const double d = 1 - 2 * x;
  m.dxdt = x == 0.0 ? HUGE_VAL : d * d / (4 * x * (1 - x));
  return m;
}

Rational legendre_t_of_x(const Rational& x) {
  if (x * 2 == 1) throw DomainError("the Legendre map is singular at x = 1/2");
  Rational t = (2 * x * x - 2 * x + 1) / (1 - 2 * x);
  t.canonicalize();
  return t;
}

namespace {

double bernstein_square_sum(unsigned n, double x) {
  // sum_k (C(n,k) x^k (1-x)^(n-k))^2 by the term ratio
  double term = std::pow(1 - x, n);
  double sum = term * term;
  for (unsigned k = 0; k < n; ++k) {
    term *= static_cast<double>(n - k) / (k + 1) * (x / (1 - x));
    sum += term * term;
  }
  return sum;
}

}  // namespace

NeuschelResidual neuschel_check(unsigned n, double x) {
  const LegendreMap map = LegendreMap::from_x(x);
  const double t = map.t;
  const double root = std::sqrt((t - 1) * (t + 1));
  const double lead = 1 / (t + root);  // t - sqrt(t^2 - 1)
  const double p = legendre_p(n, t);

  NeuschelResidual out;
  out.f_value = x == 0.0 ? 1.0 : bernstein_square_sum(n, x);
  out.residual = out.f_value - std::pow(lead, n) * p;
  out.inverse_residual = (p - out.f_value / std::pow(1 - 2 * x, n)) / p;
  return out;
}

bool neuschel_check_exact(unsigned n, const Rational& x) {
  if (x < 0 || x * 2 >= 1) {
    throw DomainError("exact Legendre bridge needs x in [0, 1/2), got " + to_string(x));
  }
  const Rational t = legendre_t_of_x(x);
  return f_poly_direct(n)(x) == pow(Rational(1 - 2 * x), n) * legendre_p(n, t);
}

bool derivative_relations_check(unsigned n, const Rational& t, std::span<const RationalPoly> custom) {
  if (n < 1) throw std::invalid_argument("derivative relations need n >= 1");
  if (!custom.empty() && custom.size() < n + 2) {
    throw std::invalid_argument(
        fmt::format("need P_0..P_{} ({} polynomials), got {}", n + 1, n + 2, custom.size()));
  }
  const auto P = [&](unsigned k) { return custom.empty() ? legendre_poly(k) : custom[k]; };
  const RationalPoly p_prev = P(n - 1);
  const RationalPoly p = P(n);
  const RationalPoly p_next = P(n + 1);
  const Rational nn(n);

  const bool recurrence =
      (nn + 1) * p_next(t) - (2 * nn + 1) * t * p(t) + nn * p_prev(t) == 0;
  const Rational d_next = p_next.derivative()(t);
  const bool shifted = d_next - t * p.derivative()(t) == (nn + 1) * p(t);
  const bool gap = d_next - p_prev.derivative()(t) == (2 * nn + 1) * p(t);

  // P'_n(t(x)) against the F_n side as functions of x.
  const RationalFn t_of_x(RationalPoly({Rational(1), Rational(-2), Rational(2)}),
                          RationalPoly::linear(Rational(1), Rational(-2)));
  const RationalFn lhs = compose(p.derivative(), t_of_x);
  const RationalPoly f = f_poly_direct(n);
  const RationalPoly one_minus_2x = RationalPoly::linear(Rational(1), Rational(-2));
  const RationalPoly bracket = one_minus_2x * f.derivative() + Rational(2 * nn) * f;
  const RationalPoly four_x_one_minus_x = RationalPoly({Rational(0), Rational(4), Rational(-4)});
  // (1-2x)^(1-n) (...) / (4x(1-x)) = (...) / ((1-2x)^(n-1) 4x(1-x))
  const RationalFn rhs(bracket, one_minus_2x.pow(n - 1) * four_x_one_minus_x);
  const bool mapped = lhs == rhs;

  return recurrence && shifted && gap && mapped;
}

double cosine_rep(unsigned n, double theta) {
  const Rational lead = Rational(binomial(2 * n, n)) / pow(Rational(4), n);
  double sum = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    const Rational coeff = lead * Rational(b * b) / Rational(binomial(2 * n, 2 * k));
    sum += to_double(coeff) * std::cos((static_cast<double>(n) - 2.0 * k) * theta);
  }
  return sum;
}

}  // namespace sqsum
