#include "sqsum/exactalg.hpp"

#include <fmt/format.h>

#include <utility>

namespace sqsum {

namespace {

RationalPoly x_poly() { return RationalPoly::linear(Rational(0), Rational(1)); }
RationalPoly const_poly(const Rational& value) { return RationalPoly::constant(value); }
RationalPoly const_poly(long value) { return RationalPoly::constant(Rational(value)); }

Rational power_of_four(long e) {
  Rational out(1);
  if (e >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<mp_bitcnt_t>(2 * e));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-2 * e));
  }
  return out;
}

Rational q(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

RationalPoly f_poly_direct(unsigned n) {
  const RationalPoly x2 = x_poly() * x_poly();
  const RationalPoly one_minus_x = RationalPoly::linear(Rational(1), Rational(-1));
  const RationalPoly omx2 = one_minus_x * one_minus_x;

  // Powers of (1-x)^2 from 0 to n, then combine with x^2k.
  std::vector<RationalPoly> omx2_pows{const_poly(1)};
  for (unsigned k = 1; k <= n; ++k) omx2_pows.push_back(omx2_pows.back() * omx2);

  RationalPoly out;
  RationalPoly x2k = const_poly(1);
  for (unsigned k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    out += Rational(b * b) * (x2k * omx2_pows[n - k]);
    x2k *= x2;
  }
  return out;
}

RationalPoly f_poly_parseval(unsigned n) {
  std::vector<Rational> coeffs(2 * n + 1);
  const Rational lead = power_of_four(-static_cast<long>(n)) * Rational(binomial(2 * n, n));
  for (unsigned k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    coeffs[2 * k] = lead * power_of_four(k) * q(b * b, binomial(2 * n, 2 * k));
  }
  return RationalPoly(std::move(coeffs), Variable::S);
}

RationalPoly s_to_x(const RationalPoly& in_s) {
  return compose(in_s, RationalPoly::linear(Rational(-1, 2), Rational(1)));
}

RecurrenceResiduals recurrence_residuals(unsigned n, const RationalPoly& f_prev,
                                         const RationalPoly& f, const RationalPoly& f_next) {
  const RationalPoly x = x_poly();
  const RationalPoly m = RationalPoly::linear(Rational(1), Rational(-2));  // 1 - 2x
  const RationalPoly m2 = m * m;
  const RationalPoly xx = x * RationalPoly::linear(Rational(1), Rational(-1));  // x(1-x)
  const Rational nn(n);

  RecurrenceResiduals out;
  out.three_term = Rational(2 * (nn + 1)) * f_next - Rational(2 * nn + 1) * ((const_poly(1) + m2) * f) +
                   Rational(2 * nn) * (m2 * f_prev);

  const RationalPoly d_next = f_next.derivative();
  const RationalPoly d = f.derivative();
  const RationalPoly d_prev = f_prev.derivative();
  out.mixed_derivative = m * (d_next - (const_poly(1) - Rational(2) * xx) * d) -
                         Rational(2) * ((const_poly(nn) + Rational(2) * xx) * f) +
                         Rational(2 * (nn + 1)) * f_next;

  out.derivative_gap = d_next - m2 * d_prev -
                       Rational(2) * (m * (Rational(2 * nn - 1) * f_prev - Rational(2 * nn + 1) * f));
  return out;
}

bool recurrence_check(unsigned n) {
  if (n < 1) throw std::invalid_argument("recurrence_check needs n >= 1");
  return recurrence_residuals(n, f_poly_direct(n - 1), f_poly_direct(n), f_poly_direct(n + 1))
      .all_zero();
}

// ---------------------------------------------------------------------------
// ODEs

Ode Ode::eq_s(const Params& params) {
  const Rational& n = params.n_exact();
  const Rational& c = params.c_exact();
  const RationalPoly x = x_poly();
  const RationalPoly one_cx = RationalPoly::linear(Rational(1), c);
  const RationalPoly one_2cx = RationalPoly::linear(Rational(1), Rational(2 * c));
  Ode ode;
  ode.kind = Kind::S;
  ode.label = "S(" + params.to_string() + ")";
  ode.a2 = x * one_cx * one_2cx;
  ode.a1 = Rational(4 * (n + c)) * (x * one_cx) + const_poly(1);
  ode.a0 = Rational(2 * n) * one_2cx;
  return ode;
}

Ode Ode::eq_f(unsigned n) {
  const RationalPoly x = x_poly();
  const RationalPoly one_minus_x = RationalPoly::linear(Rational(1), Rational(-1));
  const RationalPoly one_minus_2x = RationalPoly::linear(Rational(1), Rational(-2));
  Ode ode;
  ode.kind = Kind::F;
  ode.label = fmt::format("F({})", n);
  ode.a2 = x * one_minus_x * one_minus_2x;
  ode.a1 = const_poly(1) + Rational(4 * (static_cast<long>(n) - 1)) * (x * one_minus_x);
  ode.a0 = Rational(2 * static_cast<long>(n)) * one_minus_2x;
  return ode;
}

Ode Ode::eq_g(unsigned n) {
  const RationalPoly x = x_poly();
  const RationalPoly one_plus_x = RationalPoly::linear(Rational(1), Rational(1));
  const RationalPoly one_plus_2x = RationalPoly::linear(Rational(1), Rational(2));
  Ode ode;
  ode.kind = Kind::G;
  ode.label = fmt::format("G({})", n);
  ode.a2 = x * one_plus_x * one_plus_2x;
  ode.a1 = Rational(4 * (static_cast<long>(n) + 1)) * (x * one_plus_x) + const_poly(1);
  ode.a0 = Rational(2 * static_cast<long>(n)) * one_plus_2x;
  return ode;
}

Ode Ode::eq_j(unsigned n) {
  const RationalPoly x = x_poly();
  const RationalPoly one_plus_x = RationalPoly::linear(Rational(1), Rational(1));
  const RationalPoly one_minus_x = RationalPoly::linear(Rational(1), Rational(-1));
  const long nn = n;
  Ode ode;
  ode.kind = Kind::J;
  ode.label = fmt::format("J({})", n);
  ode.a2 = x * one_plus_x * one_minus_x * one_minus_x;
  ode.a1 = -(one_minus_x * RationalPoly({Rational(-1), Rational(-4 * (nn + 1)), Rational(1)}));
  ode.a0 = Rational(2 * (nn + 1)) * one_plus_x;
  return ode;
}

Ode Ode::eq_u(unsigned n) {
  const RationalPoly x = x_poly();
  const RationalPoly one_plus_x = RationalPoly::linear(Rational(1), Rational(1));
  const RationalPoly one_minus_x = RationalPoly::linear(Rational(1), Rational(-1));
  const long nn = n;
  Ode ode;
  ode.kind = Kind::U;
  ode.label = fmt::format("U({})", n);
  ode.a2 = x * one_minus_x * one_plus_x * one_plus_x;
  ode.a1 = one_plus_x * RationalPoly({Rational(1), Rational(4 * nn), Rational(-1)});
  ode.a0 = Rational(2 * nn) * one_minus_x;
  return ode;
}

namespace {

// For y = p/q:  q^3 (a2 y'' + a1 y' + a0 y)
//   = a2 (p'' q^2 - 2 p' q' q - p q'' q + 2 p q'^2) + a1 (p' q - p q') q + a0 p q^2.
RationalFn apply_operator(const RationalFn& y, const RationalPoly& a2, const RationalPoly& a1,
                          const RationalPoly& a0) {
  const RationalPoly& p = y.num();
  const RationalPoly& qd = y.den();
  const RationalPoly p1 = p.derivative();
  const RationalPoly p2 = p1.derivative();
  const RationalPoly q1 = qd.derivative();
  const RationalPoly q2 = q1.derivative();
  const RationalPoly qq = qd * qd;

  RationalPoly second = p2 * qq - Rational(2) * (p1 * q1 * qd) - p * q2 * qd +
                        Rational(2) * (p * q1 * q1);
  RationalPoly first = (p1 * qd - p * q1) * qd;
  RationalPoly numerator = a2 * second + a1 * first + a0 * (p * qq);
  if (numerator.is_zero()) return RationalFn(RationalPoly({}, y.variable()));
  return RationalFn(std::move(numerator), qq * qd);
}

}  // namespace

RationalFn ode_residual_poly(const RationalFn& y, const Ode& ode) {
  if (y.variable() != Variable::X && (y.num().degree() > 0 || y.den().degree() > 0)) {
    throw std::invalid_argument("ODE residual needs a function of x, got one in " +
                                to_string(y.variable()));
  }
  return apply_operator(y, ode.a2, ode.a1, ode.a0);
}

// ---------------------------------------------------------------------------
// Heun

HeunParams HeunParams::for_operator(const Params& params) {
  if (params.c() == 0) throw UnsupportedError("the Heun form needs c != 0");
  Rational ratio = params.n_exact() / params.c_exact();
  ratio.canonicalize();
  return HeunParams{Rational(1), Rational(2 * ratio), Rational(1), Rational(1), Rational(2 * ratio),
                    ratio};
}

void HeunParams::validate() const {
  if (alpha + beta + 1 != gamma + delta + epsilon) {
    throw std::invalid_argument(
        fmt::format("malformed Heun parameters: alpha + beta + 1 = {} but gamma + delta + epsilon = {}",
                    to_string(Rational(alpha + beta + 1)), to_string(Rational(gamma + delta + epsilon))));
  }
}

ArgTransform ArgTransform::for_operator(const Params& params) {
  if (params.c() == 0) throw UnsupportedError("the Heun form needs c != 0");
  Rational scale = Rational(-1) / params.c_exact();
  scale.canonicalize();
  return {scale};
}

RationalFn heun_residual(const RationalFn& y, const HeunParams& hp, const ArgTransform& transform) {
  hp.validate();
  const RationalPoly x = x_poly();
  const RationalPoly x_minus_1 = RationalPoly::linear(Rational(-1), Rational(1));
  const RationalPoly x_minus_half = RationalPoly::linear(Rational(-1, 2), Rational(1));

  const RationalFn arg(RationalPoly::linear(Rational(0), transform.scale));
  const RationalFn shifted = transform.scale == 1 ? y : compose(y, arg);

  const RationalPoly a2 = x * x_minus_1 * x_minus_half;
  const RationalPoly a1 = hp.gamma * (x_minus_1 * x_minus_half) + hp.delta * (x * x_minus_half) +
                          hp.epsilon * (x * x_minus_1);
  const RationalPoly a0 = RationalPoly::linear(Rational(-hp.q), Rational(hp.alpha * hp.beta));
  return apply_operator(shifted, a2, a1, a0);
}

// ---------------------------------------------------------------------------
// G_n, J_n, U_n

RationalPoly g_poly_in_u(unsigned n) {
  if (n < 1) throw std::invalid_argument("G_n needs n >= 1");
  std::vector<Rational> coeffs(2 * n);
  const Rational scale = power_of_four(1 - static_cast<long>(n));
  for (unsigned k = 0; k < n; ++k) {
    const Integer fk = factorial(k);
    const Integer fr = factorial(n - k - 1);
    coeffs[2 * k + 1] =
        scale * q(factorial(2 * k) * factorial(2 * n - 2 * k - 2), fk * fk * fr * fr);
  }
  return RationalPoly(std::move(coeffs), Variable::U);
}

RationalFn g_rational(unsigned n) {
  // u = 1/(1+2x)
  const RationalFn u(RationalPoly::constant(Rational(1)), RationalPoly::linear(Rational(1), Rational(2)));
  return compose(g_poly_in_u(n), u);
}

RationalPoly j_poly_in_w(unsigned n) {
  std::vector<Rational> coeffs(2 * n + 2);
  const Rational scale = power_of_four(-static_cast<long>(n));
  for (unsigned k = 0; k <= n; ++k) {
    const Integer fk = factorial(k);
    const Integer fr = factorial(n - k);
    coeffs[2 * k + 1] = scale * q(factorial(2 * k) * factorial(2 * n - 2 * k), fk * fk * fr * fr);
  }
  return RationalPoly(std::move(coeffs), Variable::W);
}

namespace {

RationalFn w_of_x() {
  return RationalFn(RationalPoly::linear(Rational(1), Rational(-1)),
                    RationalPoly::linear(Rational(1), Rational(1)));
}

}  // namespace

RationalFn j_rational(unsigned n) { return compose(j_poly_in_w(n), w_of_x()); }

RationalFn u_rational_series(unsigned n) {
  if (n < 1) throw std::invalid_argument("U_n needs n >= 1");
  std::vector<Rational> coeffs(2 * n + 1);
  const Rational lead = power_of_four(-static_cast<long>(n)) * Rational(binomial(2 * n, n));
  for (unsigned k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    coeffs[2 * k] = lead * q(b * b, binomial(2 * n, 2 * k));
  }
  return compose(RationalPoly(std::move(coeffs), Variable::W), w_of_x());
}

RationalFn u_rational_from_parseval(unsigned n) {
  if (n < 1) throw std::invalid_argument("U_n needs n >= 1");
  // s = x/(1+x) - 1/2 = (x - 1) / (2(1 + x))
  const RationalFn s(RationalPoly::linear(Rational(-1), Rational(1)),
                     RationalPoly::linear(Rational(2), Rational(2)));
  return compose(f_poly_parseval(n), s);
}

RationalFn u_rational(unsigned n) {
  RationalFn series = u_rational_series(n);
  if (!(series == u_rational_from_parseval(n))) {
    throw std::logic_error(fmt::format("U_{}: series and Parseval constructions disagree", n));
  }
  return series;
}

RationalFn exact_family_function(const FamilyId& family, const Rational& n) {
  if (!family.admits(n)) {
    throw ParamError(fmt::format("index n = {} is not admissible for family {}", to_string(n),
                                 family.name()));
  }
  const auto index = [&n]() { return static_cast<unsigned>(n.get_num().get_ui()); };
  switch (family.tag) {
    case Family::Bernstein: return RationalFn(f_poly_direct(index()));
    case Family::Baskakov: return g_rational(index());
    case Family::BBH: return u_rational(index());
    case Family::MKZ: return j_rational(index());
    case Family::Szasz:
      throw UnsupportedError("the Szasz-Mirakjan sum exp(-2nx) I0(2nx) has no rational form");
    case Family::General: break;
  }
  const Params params = Params::make(n, family.c);
  if (params.c() < 0) {
    const RationalFn inner(RationalPoly::linear(Rational(0), Rational(-family.c)));
    return compose(RationalFn(f_poly_direct(*params.l())), inner);
  }
  throw UnsupportedError("exact forms are implemented for c in {-1, 1}, their substitutions, "
                         "and c < 0; got " + params.to_string());
}

}  // namespace sqsum
