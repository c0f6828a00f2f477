#pragma once

// Upper bounds for the squared-basis sums of the named families.
//
//   bernstein  inv_sqrt  (1 + 4(n-1)x(1-x))^(-1/2)
//              power     (1 + 4(n-1)x(1-x))^(-n/(2(n-1))),          n >= 2
//   bbh        rational_sqrt  (x+1) / sqrt(x^2 + (4n-2)x + 1)
//   baskakov   power     (4(n+1)x(1+x) + 1)^(-n/(2(n+1)))
//              binomial  C(2n-2,n-1) (1+x)^(n-1) / (1+2x)^n
//   mkz        power     ((1-x)^2 / (x^2 + (4n+6)x + 1))^((n+1)/(2(n+2)))
//              binomial  C(2n,n) (1-x) / (1+x)^(n+1)
//   szasz      inv_sqrt  (4nx + 1)^(-1/2)

#include "sqsum/core.hpp"
#include "sqsum/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqsum {

struct BoundValue {
  std::string label;
  double value = 0.0;
  double margin = 0.0;  // value - s_value; exact when both sides are rational
  bool exact = false;
};

struct BoundReport {
  FamilyId family;
  Rational n;
  double x = 0.0;
  double s_value = 0.0;
  bool s_exact = false;  // s_value rounded from an exact rational evaluation
  std::vector<BoundValue> bounds;
  std::vector<std::string> notes;  // bounds omitted for this n
  double min_margin = 0.0;         // +inf when no bound applies
};

/// Evaluates every bound for one family and index, reusing the exact form of
/// S across points.
class BoundEvaluator {
 public:
  BoundEvaluator(const FamilyId& family, const Rational& n);

  BoundReport at(double x) const;

  const FamilyId& family() const { return family_; }
  const Rational& n() const { return n_; }

 private:
  FamilyId family_;
  Rational n_;
  std::optional<RationalFn> exact_;
};

BoundReport bound_values(const FamilyId& family, const Rational& n, double x);

/// 256 Chebyshev points on the compact domain (the open endpoint of MKZ
/// dropped), or on [0, 20] plus 10^j, j = -6..6, when the domain is unbounded.
/// Sorted, without duplicates.
std::vector<double> standard_grid(const FamilyId& family, const Rational& n);

}  // namespace sqsum
