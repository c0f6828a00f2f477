#include "sqsum/core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace sqsum {

namespace {

constexpr double kLogOverflowGuard = 600.0;

// Scale used to keep running products inside double range.
constexpr double kRescale = 1e200;

}  // namespace

bool Interval::bounded() const { return std::isfinite(hi); }

bool Interval::contains(double x) const {
  if (!std::isfinite(x) || x < lo) return false;
  return open_right ? x < hi : x <= hi;
}

std::string Interval::to_string() const {
  if (!bounded()) return fmt::format("[{}, inf)", lo);
  return fmt::format("[{}, {}{}", lo, hi, open_right ? ")" : "]");
}

Params Params::make(const Rational& n, const Rational& c) {
  if (n <= 0) {
    throw ParamError("operator index n must be positive, got " + sqsum::to_string(n));
  }
  Params p;
  p.n_exact_ = n;
  p.c_exact_ = c;
  p.n_exact_.canonicalize();
  p.c_exact_.canonicalize();
  p.n_ = to_double(p.n_exact_);
  p.c_ = to_double(p.c_exact_);
  if (c < 0) {
    Rational l = n / (-c);
    l.canonicalize();
    if (l.get_den() != 1) {
      throw ParamError("for c < 0 the index must satisfy n = -c*l with l a positive integer; "
                       "n/(-c) = " + sqsum::to_string(l));
    }
    if (!l.get_num().fits_uint_p()) throw ParamError("l = n/(-c) is too large");
    p.l_ = static_cast<unsigned>(l.get_num().get_ui());
  }
  return p;
}

Params Params::make(double n, double c) { return make(to_rational(n), to_rational(c)); }

Interval Params::domain() const {
  if (c_ < 0) return Interval{0.0, to_double(Rational(-1 / c_exact_)), false};
  return Interval{0.0, std::numeric_limits<double>::infinity(), false};
}

void Params::check_domain(double x) const {
  const Interval d = domain();
  if (!d.contains(x)) {
    throw DomainError(fmt::format("x = {} lies outside I_c = {} for {}", x, d.to_string(),
                                  to_string()));
  }
}

std::string Params::to_string() const {
  return fmt::format("n={}, c={}", sqsum::to_string(n_exact_), sqsum::to_string(c_exact_));
}

FamilyId FamilyId::general(const Rational& c) {
  if (c == -1) return bernstein();
  if (c == 0) return szasz();
  if (c == 1) return baskakov();
  return {Family::General, c};
}

FamilyId FamilyId::parse(std::string_view raw, const std::optional<Rational>& c) {
  std::string name(raw);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (name == "bernstein") return bernstein();
  if (name == "szasz") return szasz();
  if (name == "baskakov") return baskakov();
  if (name == "bbh") return bbh();
  if (name == "mkz") return mkz();
  if (name == "general") {
    if (!c) throw ParamError("family 'general' requires -c");
    return general(*c);
  }
  throw ParamError("unknown family '" + std::string(raw) + "'");
}

std::string FamilyId::name() const {
  switch (tag) {
    case Family::Bernstein: return "bernstein";
    case Family::Szasz: return "szasz";
    case Family::Baskakov: return "baskakov";
    case Family::BBH: return "bbh";
    case Family::MKZ: return "mkz";
    case Family::General: return "general";
  }
  return "general";
}

bool FamilyId::admits(const Rational& n) const {
  const bool integral = n.get_den() == 1;
  switch (tag) {
    case Family::MKZ: return integral && n >= 0;
    case Family::Bernstein:
    case Family::BBH:
    case Family::Baskakov:
    case Family::Szasz: return integral && n >= 1;
    case Family::General: break;
  }
  try {
    (void)Params::make(n, c);
    return true;
  } catch (const ParamError&) {
    return false;
  }
}

Params FamilyId::underlying(const Rational& n) const {
  if (!admits(n)) {
    throw ParamError(fmt::format("index n = {} is not admissible for family {}", sqsum::to_string(n),
                                 name()));
  }
  switch (tag) {
    case Family::Bernstein:
    case Family::BBH: return Params::make(n, Rational(-1));
    case Family::Szasz: return Params::make(n, Rational(0));
    case Family::Baskakov: return Params::make(n, Rational(1));
    case Family::MKZ: return Params::make(Rational(n + 1), Rational(1));
    case Family::General: break;
  }
  return Params::make(n, c);
}

Interval FamilyId::domain(const Rational& n) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (tag) {
    case Family::BBH: return Interval{0.0, inf, false};
    case Family::MKZ: return Interval{0.0, 1.0, true};
    default: return underlying(n).domain();
  }
}

double FamilyId::map_argument(double x) const {
  switch (tag) {
    case Family::BBH: return x / (1.0 + x);
    case Family::MKZ: return x / (1.0 - x);
    default: return x;
  }
}

Rational FamilyId::map_argument(const Rational& x) const {
  Rational r;
  switch (tag) {
    case Family::BBH: r = x / (1 + x); break;
    case Family::MKZ: r = x / (1 - x); break;
    default: r = x;
  }
  r.canonicalize();
  return r;
}

double gen_binom(double alpha, unsigned k) {
  double result = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    result *= (alpha - j) / (j + 1);
  }
  return result;
}

namespace {

// log of prod_{j<k} (n + j c)/(j+1); every factor is positive on the admissible range.
double log_rising_over_factorial(double n, double c, unsigned k) {
  double acc = 0.0;
  for (unsigned j = 0; j < k; ++j) acc += std::log((n + j * c) / (j + 1));
  return acc;
}

double bernstein_term(unsigned l, unsigned k, double u) {
  if (u == 0.0) return k == 0 ? 1.0 : 0.0;
  if (u == 1.0) return k == l ? 1.0 : 0.0;
  if (l <= 1000) {
    // C(l, k) by the multiplicative formula stays exact-ish and below overflow for l <= 1000.
    double binom = 1.0;
    for (unsigned j = 0; j < k; ++j) binom = binom * (l - j) / (j + 1);
    if (std::isfinite(binom)) {
      const double direct = binom * std::pow(u, k) * std::pow(1.0 - u, l - k);
      if (direct > 1e-280) return direct;
    }
  }
  return std::exp(std::lgamma(l + 1.0) - std::lgamma(k + 1.0) - std::lgamma(l - k + 1.0) +
                  k * std::log(u) + (l - k) * std::log1p(-u));
}

}  // namespace

double basis(const Params& params, unsigned k, double x) {
  params.check_domain(x);
  const double n = params.n();
  const double c = params.c();
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;

  if (c < 0) {
    const unsigned l = *params.l();
    if (k > l) return 0.0;
    return bernstein_term(l, k, std::min(1.0, -c * x));
  }

  if (c == 0) {
    const double nx = n * x;
    if (nx < kLogOverflowGuard && k < 150) {
      double value = std::exp(-nx);
      for (unsigned j = 0; j < k; ++j) value *= nx / (j + 1);
      return value;
    }
    return std::exp(k * std::log(nx) - nx - std::lgamma(k + 1.0));
  }

  const double a = n / c;
  const double log_base = std::log1p(c * x);
  if (std::abs(a * log_base) < kLogOverflowGuard && k < 150) {
    double value = std::exp(-a * log_base);
    const double step = x / (1.0 + c * x);
    for (unsigned j = 0; j < k; ++j) value *= (n + j * c) / (j + 1) * step;
    return value;
  }
  return std::exp(log_rising_over_factorial(n, c, k) + k * std::log(x) - (a + k) * log_base);
}

PartitionSum partition_sum(const Params& params, double x, double eps) {
  params.check_domain(x);
  PartitionSum out;
  const double n = params.n();
  const double c = params.c();

  if (c < 0) {
    const unsigned l = *params.l();
    for (unsigned k = 0; k <= l; ++k) out.sum += basis(params, k, x);
    out.terms = l + 1;
    return out;
  }
  if (x == 0.0) {
    out.sum = 1.0;
    out.terms = 1;
    return out;
  }

  // p_{k+1}/p_k = (n + k c)/(k + 1) * x/(1 + c x). The factor (n + k c)/(k + 1)
  // is monotone in k with limit c, so max(current ratio, limit) bounds every
  // later ratio.
  const double step = x / (1.0 + c * x);
  const double limit = c * step;
  const double log_p0 = c == 0 ? -n * x : -(n / c) * std::log1p(c * x);

  double term = 1.0;  // p_k / exp(log_scale)
  double sum = 0.0;
  double log_scale = log_p0;
  constexpr unsigned kMaxTerms = 10'000'000;
  unsigned k = 0;
  double tail = std::numeric_limits<double>::infinity();
  for (; k < kMaxTerms; ++k) {
    sum += term;
    const double ratio = (n + k * c) / (k + 1) * step;
    const double rho = std::max(ratio, limit);
    term *= ratio;
    if (rho < 1.0) {
      tail = term / (1.0 - rho);
      if (tail <= eps * sum) {
        ++k;
        break;
      }
    }
    if (term > kRescale || sum > kRescale) {
      term /= kRescale;
      sum /= kRescale;
      tail /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  out.sum = sum > 0 ? std::exp(std::log(sum) + log_scale) : 0.0;
  out.tail_bound = !std::isfinite(tail) ? tail : tail > 0 ? std::exp(std::log(tail) + log_scale) : 0.0;
  out.terms = k;
  return out;
}

}  // namespace sqsum
