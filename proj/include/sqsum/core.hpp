#pragma once

// Operator-family parameters, domains, and the fundamental functions p_{n,k}^{[c]}.

#include "sqsum/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqsum {

/// Invalid (n, c) pair or family index.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of the function being evaluated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed interval [lo, hi]; hi may be +inf. `open_right` marks [lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool open_right = false;

  bool bounded() const;
  bool contains(double x) const;
  std::string to_string() const;
};

/// Validated (n, c). For c < 0 the operator index must be n = -c*l with l a
/// positive integer; for c >= 0 any n > 0 is accepted. Both values are kept
/// exactly so the divisibility test has no tolerance.
class Params {
 public:
  static Params make(const Rational& n, const Rational& c);
  static Params make(double n, double c);

  double n() const { return n_; }
  double c() const { return c_; }
  const Rational& n_exact() const { return n_exact_; }
  const Rational& c_exact() const { return c_exact_; }

  /// Number of basis functions minus one, present iff c < 0.
  std::optional<unsigned> l() const { return l_; }

  /// n / c; only meaningful for c != 0.
  double ratio() const { return n_ / c_; }

  /// I_c = [0, -1/c] for c < 0, [0, inf) otherwise.
  Interval domain() const;

  /// Throws DomainError naming x and I_c.
  void check_domain(double x) const;

  std::string to_string() const;

 private:
  Params() = default;

  Rational n_exact_;
  Rational c_exact_;
  double n_ = 0.0;
  double c_ = 0.0;
  std::optional<unsigned> l_;
};

enum class Family { General, Bernstein, Szasz, Baskakov, BBH, MKZ };

/// Operator family. Bernstein, Szasz and Baskakov are General(c) for
/// c = -1, 0, 1; BBH and MKZ are substitutions over Bernstein and Baskakov:
///   U_n(x) = F_n(x/(1+x)),   J_n(x) = G_{n+1}(x/(1-x)).
struct FamilyId {
  Family tag = Family::General;
  Rational c;  // used only by General

  static FamilyId general(const Rational& c);  // canonicalizes c in {-1, 0, 1}
  static FamilyId bernstein() { return {Family::Bernstein, Rational(-1)}; }
  static FamilyId szasz() { return {Family::Szasz, Rational(0)}; }
  static FamilyId baskakov() { return {Family::Baskakov, Rational(1)}; }
  static FamilyId bbh() { return {Family::BBH, Rational(-1)}; }
  static FamilyId mkz() { return {Family::MKZ, Rational(1)}; }

  /// Parses bernstein|szasz|baskakov|bbh|mkz; "general" needs c.
  static FamilyId parse(std::string_view name, const std::optional<Rational>& c = std::nullopt);

  std::string name() const;

  /// Smallest admissible index (0 for MKZ, else 1 when integral).
  bool admits(const Rational& n) const;

  /// The S_{n,c} parameters whose sum the family's function reduces to
  /// (after the argument map below).
  Params underlying(const Rational& n) const;

  /// Domain of the family's own variable.
  Interval domain(const Rational& n) const;

  /// Maps the family's variable onto the argument of S_{n,c}.
  double map_argument(double x) const;
  Rational map_argument(const Rational& x) const;

  bool operator==(const FamilyId& other) const = default;
};

/// Generalized binomial coefficient alpha(alpha-1)...(alpha-k+1)/k!.
double gen_binom(double alpha, unsigned k);

/// p_{n,k}^{[c]}(x) >= 0. Switches to log space when the prefactor would
/// leave double range.
double basis(const Params& params, unsigned k, double x);

struct PartitionSum {
  double sum = 0.0;
  unsigned terms = 0;
  double tail_bound = 0.0;  // certified bound on the omitted terms
};

/// Sum_{k} p_{n,k}^{[c]}(x), truncated once a geometric ratio bound
/// certifies tail <= eps * partial sum. Exact term count for c < 0.
PartitionSum partition_sum(const Params& params, double x, double eps = 1e-15);

}  // namespace sqsum
