#include "sqsum/evalnum.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sqsum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRescale = 1e200;
const double kLogRescale = std::log(kRescale);

// Series of positive terms kept as sum * exp(log_scale) so that neither the
// running term nor the partial sum leaves double range.
struct LogSeries {
  double log_value = 0.0;
  double rel_err = 0.0;
  unsigned terms = 0;
};

class ScaledAccumulator {
 public:
  void add(double term_scaled) { sum_ += term_scaled; }

  // Keeps `term` and the partial sum below kRescale.
  void normalize(double& term, double& tail) {
    if (term > kRescale || sum_ > kRescale) {
      term /= kRescale;
      tail /= kRescale;
      sum_ /= kRescale;
      log_scale_ += kLogRescale;
    }
  }

  double sum() const { return sum_; }
  double log_value() const { return std::log(sum_) + log_scale_; }

 private:
  double sum_ = 0.0;
  double log_scale_ = 0.0;
};

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

// log of 2F1(a, a; 1; z).
LogSeries hyp2f1_diag_log(double a, double z, double rtol) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError(fmt::format("2F1 diagonal series needs z >= 0, got z = {}", z));
  }
  LogSeries out;
  if (z == 0.0 || a == 0.0) {
    out.terms = 1;
    return out;
  }

  if (is_nonpositive_integer(a)) {
    const auto last = static_cast<unsigned>(-a);
    ScaledAccumulator acc;
    double term = 1.0;
    double unused_tail = 0.0;
    for (unsigned k = 0; k <= last; ++k) {
      acc.add(term);
      const double f = (a + k) / (k + 1);
      term *= f * f * z;
      acc.normalize(term, unused_tail);
    }
    out.log_value = acc.log_value();
    out.terms = last + 1;
    out.rel_err = (out.terms + 2) * kEps;
    return out;
  }

  if (z >= 1.0) {
    throw DomainError(fmt::format("2F1({0}, {0}; 1; z) diverges for z = {1} >= 1", a, z));
  }

  // term_{k+1}/term_k = ((a+k)/(k+1))^2 z. Once a + k > 0 the factor
  // (a+k)/(k+1) is monotone with limit 1, so max(ratio, z) bounds every later
  // ratio and, when it is below 1, tail <= term_{k+1} / (1 - rho).
  constexpr unsigned kMaxTerms = 20'000'000;
  ScaledAccumulator acc;
  double term = 1.0;
  double tail = std::numeric_limits<double>::infinity();
  unsigned k = 0;
  for (; k < kMaxTerms; ++k) {
    acc.add(term);
    const double f = (a + k) / (k + 1);
    const double ratio = f * f * z;
    term *= ratio;
    const double rho = std::max(ratio, z);
    if (a + k > 0.0 && rho < 1.0) {
      tail = term / (1.0 - rho);
      if (tail <= 0.1 * rtol * acc.sum()) {
        ++k;
        break;
      }
    }
    acc.normalize(term, tail);
  }
  out.log_value = acc.log_value();
  out.terms = k;
  out.rel_err = tail / acc.sum() + (k + 2) * kEps;
  return out;
}

// log of sum_k (z^2/4)^k / (k!)^2.
LogSeries bessel_i0_log(double z) {
  LogSeries out;
  const double q = 0.25 * z * z;
  ScaledAccumulator acc;
  double term = 1.0;
  double tail = std::numeric_limits<double>::infinity();
  unsigned k = 0;
  for (; k < 10'000'000; ++k) {
    acc.add(term);
    const double ratio = q / ((k + 1.0) * (k + 1.0));
    term *= ratio;
    // Ratios decrease in k.
    if (ratio < 1.0) {
      tail = term / (1.0 - ratio);
      if (tail <= 1e-17 * acc.sum()) {
        ++k;
        break;
      }
    }
    acc.normalize(term, tail);
  }
  out.log_value = acc.log_value();
  out.terms = k;
  out.rel_err = tail / acc.sum() + (k + 2) * kEps;
  return out;
}

constexpr double kHankelThreshold = 40.0;

double quad_rule_sum(QuadratureKind kind, unsigned m, auto&& integrand) {
  // Equal weights pi/m against the normalizing 1/pi.
  double sum = 0.0;
  for (unsigned j = 1; j <= m; ++j) {
    const double cosine = std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * m));
    const double t = kind == QuadratureKind::ChebyshevOn01 ? 0.5 * (1.0 + cosine) : cosine;
    sum += integrand(t);
  }
  return sum / m;
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::Series: return "series";
    case Method::ClosedForm: return "closed";
    case Method::Quadrature: return "quadrature";
  }
  return "series";
}

QuadratureRule QuadratureRule::make(QuadratureKind kind, unsigned m) {
  if (m == 0) throw std::invalid_argument("quadrature rule needs at least one node");
  QuadratureRule rule;
  rule.kind = kind;
  rule.nodes.reserve(m);
  rule.weights.assign(m, std::numbers::pi / m);
  for (unsigned j = 1; j <= m; ++j) {
    const double cosine = std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * m));
    rule.nodes.push_back(kind == QuadratureKind::ChebyshevOn01 ? 0.5 * (1.0 + cosine) : cosine);
  }
  return rule;
}

Hyp2f1Result hyp2f1_diag_eval(double a, double z, double rtol) {
  const LogSeries s = hyp2f1_diag_log(a, z, rtol);
  Hyp2f1Result out;
  out.value = std::exp(s.log_value);
  out.err_estimate = s.rel_err * out.value;
  out.terms = s.terms;
  out.beyond_switch = !is_nonpositive_integer(a) && z > kHyp2f1Switch;
  return out;
}

double hyp2f1_diag(double a, double z) { return hyp2f1_diag_eval(a, z).value; }

double bessel_i0(double z) {
  if (z < 0.0) z = -z;
  const LogSeries s = bessel_i0_log(z);
  return std::exp(s.log_value);
}

BesselResult bessel_i0_scaled(double z) {
  if (z < 0.0) z = -z;
  BesselResult out;
  if (z < kHankelThreshold) {
    const LogSeries s = bessel_i0_log(z);
    out.value = std::exp(s.log_value - z);
    out.err_estimate = out.value * (s.rel_err + (z + 2.0) * kEps);
    out.terms = s.terms;
    return out;
  }
  // exp(-z) I0(z) ~ (2 pi z)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8z)^k); the
  // omitted part past the smallest term is O(exp(-2z)).
  double term = 1.0;
  double sum = 1.0;
  unsigned k = 1;
  for (; k < 200; ++k) {
    const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * z);
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi * z);
  out.value = sum * scale;
  out.err_estimate = (2.0 * term + (k + 2) * kEps * sum) * scale;
  out.terms = k;
  return out;
}

EvalResult s_series(const Params& params, double x, double rtol) {
  params.check_domain(x);
  EvalResult out;
  out.method = Method::Series;
  const double n = params.n();
  const double c = params.c();

  if (c < 0) {
    const unsigned l = *params.l();
    double sum = 0.0;
    for (unsigned k = 0; k <= l; ++k) {
      const double p = basis(params, k, x);
      sum += p * p;
    }
    out.value = sum;
    out.terms_or_nodes = l + 1;
    out.err_estimate = (l + 4) * kEps * sum;
    return out;
  }
  if (x == 0.0) {
    out.value = 1.0;
    out.terms_or_nodes = 1;
    return out;
  }

  // q_k = p_k^2 with q_{k+1}/q_k = ((n + k c)/(k + 1) * x/(1 + c x))^2.
  const double step = x / (1.0 + c * x);
  const double limit = c * step;
  const double log_q0 = c == 0 ? -2.0 * n * x : -2.0 * (n / c) * std::log1p(c * x);

  ScaledAccumulator acc;
  double term = 1.0;
  double tail = std::numeric_limits<double>::infinity();
  unsigned k = 0;
  for (; k < 20'000'000; ++k) {
    acc.add(term);
    const double f = (n + k * c) / (k + 1) * step;
    term *= f * f;
    const double rho_root = std::max(f, limit);
    if (rho_root < 1.0) {
      tail = term / (1.0 - rho_root * rho_root);
      if (tail <= 0.1 * rtol * acc.sum()) {
        ++k;
        break;
      }
    }
    acc.normalize(term, tail);
  }
  out.value = std::exp(acc.log_value() + log_q0);
  out.terms_or_nodes = k;
  out.err_estimate = out.value * (tail / acc.sum() + (k + std::abs(log_q0) + 4) * kEps);
  return out;
}

EvalResult s_closed(const Params& params, double x, double rtol) {
  params.check_domain(x);
  EvalResult out;
  out.method = Method::ClosedForm;
  const double n = params.n();
  const double c = params.c();

  if (c == 0) {
    const BesselResult b = bessel_i0_scaled(2.0 * n * x);
    out.value = b.value;
    out.err_estimate = b.err_estimate;
    out.terms_or_nodes = b.terms;
    return out;
  }

  double log_prefactor = 0.0;
  double a = 0.0;
  double z = 0.0;
  if (c < 0) {
    // Symmetric about the midpoint of I_c: reflect so that z <= 1.
    const unsigned l = *params.l();
    double u = std::min(1.0, -c * x);
    if (u > 0.5) u = 1.0 - u;
    a = -static_cast<double>(l);
    log_prefactor = 2.0 * l * std::log1p(-u);
    const double w = u / (1.0 - u);
    z = w * w;
  } else {
    a = n / c;
    const double w = c * x / (1.0 + c * x);
    z = w * w;
    if (z > kHyp2f1Switch) {
      return s_quad(params, x, 16, rtol, kQuadMaxNodesDelegated);
    }
    log_prefactor = -2.0 * a * std::log1p(c * x);
  }
  const LogSeries f = hyp2f1_diag_log(a, z, rtol);
  out.value = std::exp(log_prefactor + f.log_value);
  out.terms_or_nodes = f.terms;
  out.err_estimate = out.value * (f.rel_err + (std::abs(log_prefactor) + 4) * kEps);
  return out;
}

double s_quad_fixed(const Params& params, double x, unsigned m) {
  params.check_domain(x);
  if (m < 1) throw std::invalid_argument("quadrature needs m >= 1");
  const double n = params.n();
  const double c = params.c();
  if (c == 0) {
    const double rate = 2.0 * n * x;
    return quad_rule_sum(QuadratureKind::ChebyshevOnM11, m,
                         [rate](double t) { return std::exp(-rate * (1.0 + t)); });
  }
  const double b = (1.0 + 2.0 * c * x) * (1.0 + 2.0 * c * x);
  if (c < 0) {
    const int l = static_cast<int>(*params.l());
    return quad_rule_sum(QuadratureKind::ChebyshevOn01, m,
                         [b, l](double t) { return std::pow(t + (1.0 - t) * b, l); });
  }
  const double a = n / c;
  return quad_rule_sum(QuadratureKind::ChebyshevOn01, m,
                       [b, a](double t) { return std::pow(t + (1.0 - t) * b, -a); });
}

EvalResult s_quad(const Params& params, double x, unsigned m, double rtol, unsigned max_nodes) {
  if (m < 2) throw std::invalid_argument("s_quad needs m >= 2");
  EvalResult out;
  out.method = Method::Quadrature;
  double previous = s_quad_fixed(params, x, m);
  while (true) {
    const unsigned next_m = 2 * m;
    const double current = s_quad_fixed(params, x, next_m);
    const double diff = std::abs(current - previous);
    out.value = current;
    out.terms_or_nodes = next_m;
    out.err_estimate = diff + 8 * kEps * std::abs(current);
    if (diff < std::max(1e-13, rtol * std::abs(current)) || next_m >= max_nodes) break;
    previous = current;
    m = next_m;
  }
  return out;
}

double t_closed(const Params& params, double x, double y) {
  params.check_domain(x);
  params.check_domain(y);
  const double n = params.n();
  const double c = params.c();

  if (c == 0) {
    if (x == 0.0 || y == 0.0) return std::exp(-n * (x + y));
    const double rx = std::sqrt(x);
    const double ry = std::sqrt(y);
    const BesselResult b = bessel_i0_scaled(2.0 * n * rx * ry);
    return b.value * std::exp(-n * (rx - ry) * (rx - ry));
  }

  if (c < 0) {
    // T is invariant under (u, v) -> (1-u, 1-v); pick the side with z <= 1.
    const unsigned l = *params.l();
    double u = std::min(1.0, -c * x);
    double v = std::min(1.0, -c * y);
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    const double base = (1.0 - u) * (1.0 - v);
    if (base == 0.0) return 0.0;  // one of u, v is 1 and the other 0
    const LogSeries f = hyp2f1_diag_log(-static_cast<double>(l), u * v / base, kDefaultRtol);
    return std::exp(l * std::log(base) + f.log_value);
  }

  const double a = n / c;
  const double z = c * c * x * y / ((1.0 + c * x) * (1.0 + c * y));
  const LogSeries f = hyp2f1_diag_log(a, z, kDefaultRtol);
  return std::exp(-a * (std::log1p(c * x) + std::log1p(c * y)) + f.log_value);
}

double t_quad(const Params& params, double x, double y, unsigned m) {
  params.check_domain(x);
  params.check_domain(y);
  if (m < 2) throw std::invalid_argument("t_quad needs m >= 2");
  const double n = params.n();
  const double c = params.c();

  if (c == 0) {
    const double sum = x + y;
    const double cross = 2.0 * std::sqrt(x * y);
    return quad_rule_sum(QuadratureKind::ChebyshevOnM11, m,
                         [=](double t) { return std::exp(-n * (sum + t * cross)); });
  }
  const double prod_c = c * c * x * y;
  const double prod_1 = std::max(0.0, (1.0 + c * x) * (1.0 + c * y));
  const double root_sum = std::sqrt(prod_c) + std::sqrt(prod_1);
  const double lead = root_sum * root_sum;
  const double slope = 4.0 * std::sqrt(prod_c * prod_1);
  if (c < 0) {
    const int l = static_cast<int>(*params.l());
    return quad_rule_sum(QuadratureKind::ChebyshevOn01, m, [=](double t) {
      return std::pow(std::max(0.0, lead - t * slope), l);
    });
  }
  const double a = n / c;
  return quad_rule_sum(QuadratureKind::ChebyshevOn01, m,
                       [=](double t) { return std::pow(lead - t * slope, -a); });
}

double family_value(const FamilyId& family, const Rational& n, double x, double rtol) {
  const Interval domain = family.domain(n);
  if (!domain.contains(x)) {
    throw DomainError(fmt::format("x = {} lies outside the {} domain {}", x, family.name(),
                                  domain.to_string()));
  }
  const Params params = family.underlying(n);
  double mapped = family.map_argument(x);
  if (params.c() < 0) mapped = std::min(mapped, params.domain().hi);
  return s_closed(params, mapped, rtol).value;
}

}  // namespace sqsum
