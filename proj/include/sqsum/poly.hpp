#pragma once

// Dense univariate polynomials and rational functions over exact rationals.

#include "sqsum/rational.hpp"

#include <string>
#include <vector>

namespace sqsum {

/// Which variable a polynomial is written in. Only a label: arithmetic
/// requires matching labels, composition produces the inner variable.
///   X  the operator variable x
///   S  s = x - 1/2
///   U  u = 1/(1 + 2x)
///   W  w = (1 - x)/(1 + x)
///   T  the Legendre argument t
enum class Variable { X, S, U, W, T };

std::string to_string(Variable var);
Variable parse_variable(const std::string& name);

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs, Variable var = Variable::X);

  static RationalPoly constant(const Rational& value, Variable var = Variable::X);
  static RationalPoly monomial(const Rational& coeff, std::size_t degree,
                               Variable var = Variable::X);
  /// c0 + c1 * var
  static RationalPoly linear(const Rational& c0, const Rational& c1, Variable var = Variable::X);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  Variable variable() const { return var_; }
  RationalPoly relabeled(Variable var) const;

  Rational operator()(const Rational& at) const;
  double operator()(double at) const;

  RationalPoly derivative() const;
  RationalPoly pow(unsigned e) const;

  /// Scale so the coefficients are coprime integers with positive leading
  /// coefficient; returns the factor that was applied.
  Rational make_primitive();

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& scalar);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const RationalPoly& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const Rational& s) { return lhs *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly rhs) { return rhs *= s; }
  RationalPoly operator-() const;

  bool operator==(const RationalPoly& other) const;

  std::string to_string() const;

 private:
  void trim();
  void require_same_variable(const RationalPoly& other) const;

  std::vector<Rational> coeffs_;
  Variable var_ = Variable::X;
};

struct PolyDivision {
  RationalPoly quotient;
  RationalPoly remainder;
};

PolyDivision divmod(const RationalPoly& num, const RationalPoly& den);

/// Monic greatest common divisor (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// p(inner), written in inner's variable.
RationalPoly compose(const RationalPoly& p, const RationalPoly& inner);

/// sum_k a_k num^k den^(d - k) for p = sum a_k v^k and d >= deg p: the
/// numerator of p(num/den) over den^d.
RationalPoly homogenize(const RationalPoly& p, const RationalPoly& num, const RationalPoly& den,
                        unsigned d);

/// num / den, always gcd-reduced with den primitive (coprime integer
/// coefficients, positive leading coefficient). The zero function is 0/1.
class RationalFn {
 public:
  RationalFn() : den_(RationalPoly::constant(Rational(1))) {}
  explicit RationalFn(RationalPoly num);
  RationalFn(RationalPoly num, RationalPoly den);

  const RationalPoly& num() const { return num_; }
  const RationalPoly& den() const { return den_; }
  Variable variable() const { return num_.is_zero() ? den_.variable() : num_.variable(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws DomainError at a pole.
  Rational operator()(const Rational& at) const;
  double operator()(double at) const;

  RationalFn derivative() const;

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);

  friend RationalFn operator+(RationalFn lhs, const RationalFn& rhs) { return lhs += rhs; }
  friend RationalFn operator-(RationalFn lhs, const RationalFn& rhs) { return lhs -= rhs; }
  friend RationalFn operator*(RationalFn lhs, const RationalFn& rhs) { return lhs *= rhs; }
  friend RationalFn operator/(RationalFn lhs, const RationalFn& rhs) { return lhs /= rhs; }

  /// Exact equality as functions (cross-multiplication).
  bool operator==(const RationalFn& other) const;

  std::string to_string() const;

 private:
  void normalize();

  RationalPoly num_;
  RationalPoly den_;
};

/// f(g(x)); the result is in g's variable.
RationalFn compose(const RationalFn& f, const RationalFn& g);
RationalFn compose(const RationalPoly& p, const RationalFn& g);

}  // namespace sqsum
