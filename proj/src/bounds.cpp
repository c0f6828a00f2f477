#include "sqsum/bounds.hpp"

#include "sqsum/evalnum.hpp"
#include "sqsum/exactalg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sqsum {

namespace {

constexpr unsigned kStandardPoints = 256;
constexpr double kUnboundedCap = 20.0;

BoundValue inexact(std::string label, double value, double s) {
  return BoundValue{std::move(label), value, value - s, false};
}

BoundValue exact(std::string label, const Rational& value, const std::optional<Rational>& s,
                 double s_double) {
  BoundValue b{std::move(label), to_double(value), 0.0, true};
  if (s) {
    b.margin = to_double(Rational(value - *s));
  } else {
    b.margin = b.value - s_double;
    b.exact = false;
  }
  return b;
}

}  // namespace

BoundEvaluator::BoundEvaluator(const FamilyId& family, const Rational& n) : family_(family), n_(n) {
  if (!family.admits(n)) {
    throw ParamError(fmt::format("index n = {} is not admissible for family {}", to_string(n),
                                 family.name()));
  }
  try {
    exact_ = exact_family_function(family, n);
  } catch (const UnsupportedError&) {
    exact_.reset();
  }
}

BoundReport BoundEvaluator::at(double x) const {
  const Interval dom = family_.domain(n_);
  if (!dom.contains(x)) {
    throw DomainError(fmt::format("x = {} lies outside the {} domain {}", x, family_.name(),
                                  dom.to_string()));
  }
  BoundReport r;
  r.family = family_;
  r.n = n_;
  r.x = x;

  const Rational xr = to_rational(x);
  std::optional<Rational> s_exact;
  if (exact_) {
    s_exact = (*exact_)(xr);
    r.s_value = to_double(*s_exact);
    r.s_exact = true;
  } else {
    r.s_value = family_value(family_, n_, x);
  }
  const double s = r.s_value;
  const double n = to_double(n_);

  switch (family_.tag) {
    case Family::Bernstein: {
      const double base = 1.0 + 4.0 * (n - 1.0) * x * (1.0 - x);
      r.bounds.push_back(inexact("inv_sqrt", 1.0 / std::sqrt(base), s));
      if (n >= 2) {
        r.bounds.push_back(
            inexact("power", std::exp(-n / (2.0 * (n - 1.0)) * std::log(base)), s));
      } else {
        r.notes.push_back("power: needs n >= 2");
      }
      break;
    }
    case Family::BBH:
      r.bounds.push_back(
          inexact("rational_sqrt", (x + 1.0) / std::sqrt(x * x + (4.0 * n - 2.0) * x + 1.0), s));
      break;
    case Family::Baskakov: {
      const double base = 4.0 * (n + 1.0) * x * (1.0 + x) + 1.0;
      r.bounds.push_back(
          inexact("power", std::exp(-n / (2.0 * (n + 1.0)) * std::log(base)), s));
      const unsigned m = static_cast<unsigned>(n_.get_num().get_ui());
      const Rational value = Rational(binomial(2 * m - 2, m - 1)) * pow(Rational(1 + xr), m - 1) /
                             pow(Rational(1 + 2 * xr), m);
      r.bounds.push_back(exact("binomial", value, s_exact, s));
      break;
    }
    case Family::MKZ: {
      const double base = (1.0 - x) * (1.0 - x) / (x * x + (4.0 * n + 6.0) * x + 1.0);
      const double power = (n + 1.0) / (2.0 * (n + 2.0));
      r.bounds.push_back(inexact("power", base == 0.0 ? 0.0 : std::exp(power * std::log(base)), s));
      const unsigned m = static_cast<unsigned>(n_.get_num().get_ui());
      const Rational value =
          Rational(binomial(2 * m, m)) * Rational(1 - xr) / pow(Rational(1 + xr), m + 1);
      r.bounds.push_back(exact("binomial", value, s_exact, s));
      break;
    }
    case Family::Szasz:
      r.bounds.push_back(inexact("inv_sqrt", 1.0 / std::sqrt(4.0 * n * x + 1.0), s));
      break;
    case Family::General:
      r.notes.push_back("no bounds are known for general c");
      break;
  }

  r.min_margin = std::numeric_limits<double>::infinity();
  for (const BoundValue& b : r.bounds) r.min_margin = std::min(r.min_margin, b.margin);
  return r;
}

BoundReport bound_values(const FamilyId& family, const Rational& n, double x) {
  return BoundEvaluator(family, n).at(x);
}

std::vector<double> standard_grid(const FamilyId& family, const Rational& n) {
  const Interval dom = family.domain(n);
  const double lo = dom.lo;
  const double hi = dom.bounded() ? dom.hi : kUnboundedCap;
  std::vector<double> grid;
  grid.reserve(kStandardPoints + 13);
  // Chebyshev-Lobatto points, clustered at both ends.
  for (unsigned j = 0; j < kStandardPoints; ++j) {
    const double c = std::cos(std::numbers::pi * j / (kStandardPoints - 1));
    double x = lo + (hi - lo) * 0.5 * (1.0 - c);
    if (j == 0) x = lo;
    if (j + 1 == kStandardPoints) x = hi;
    grid.push_back(x);
  }
  if (!dom.bounded()) {
    for (int j = -6; j <= 6; ++j) grid.push_back(std::pow(10.0, j));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (dom.open_right) {
    grid.erase(std::remove_if(grid.begin(), grid.end(), [&](double x) { return !dom.contains(x); }),
               grid.end());
  }
  return grid;
}

}  // namespace sqsum
