#include "sqsum/poly.hpp"

#include "sqsum/core.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace sqsum {

std::string to_string(Variable var) {
  switch (var) {
    case Variable::X: return "x";
    case Variable::S: return "s";
    case Variable::U: return "u";
    case Variable::W: return "w";
    case Variable::T: return "t";
  }
  return "x";
}

Variable parse_variable(const std::string& name) {
  if (name == "x") return Variable::X;
  if (name == "s") return Variable::S;
  if (name == "u") return Variable::U;
  if (name == "w") return Variable::W;
  if (name == "t") return Variable::T;
  throw std::invalid_argument("unknown polynomial variable '" + name + "'");
}

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(std::vector<Rational> coeffs, Variable var)
    : coeffs_(std::move(coeffs)), var_(var) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const Rational& value, Variable var) {
  return RationalPoly({value}, var);
}

RationalPoly RationalPoly::monomial(const Rational& coeff, std::size_t degree, Variable var) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return RationalPoly(std::move(c), var);
}

RationalPoly RationalPoly::linear(const Rational& c0, const Rational& c1, Variable var) {
  return RationalPoly({c0, c1}, var);
}

Rational RationalPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

RationalPoly RationalPoly::relabeled(Variable var) const {
  RationalPoly out = *this;
  out.var_ = var;
  return out;
}

Rational RationalPoly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

double RationalPoly::operator()(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return RationalPoly({}, var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d), var_);
}

RationalPoly RationalPoly::pow(unsigned e) const {
  RationalPoly result = constant(Rational(1), var_);
  RationalPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Rational RationalPoly::make_primitive() {
  if (coeffs_.empty()) return Rational(1);
  Integer den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd(0);
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (coeffs_.back() < 0) factor = -factor;
  for (auto& c : coeffs_) c *= factor;
  return factor;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void RationalPoly::require_same_variable(const RationalPoly& other) const {
  // Constants are variable-free and combine with anything.
  if (var_ != other.var_ && degree() > 0 && other.degree() > 0) {
    throw std::invalid_argument("polynomials in different variables (" + sqsum::to_string(var_) +
                                ", " + sqsum::to_string(other.var_) + ")");
  }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  require_same_variable(rhs);
  if (degree() <= 0) var_ = rhs.var_;
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  require_same_variable(rhs);
  if (degree() <= 0) var_ = rhs.var_;
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  require_same_variable(rhs);
  if (degree() <= 0) var_ = rhs.var_;
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  Rational product;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpq_mul(product.get_mpq_t(), coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
      out[i + j] += product;
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool RationalPoly::operator==(const RationalPoly& other) const {
  if (coeffs_ != other.coeffs_) return false;
  return var_ == other.var_ || degree() <= 0;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  const std::string v = sqsum::to_string(var_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    std::string mag = Rational(abs(c)).get_str();
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += v;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division, gcd, composition

PolyDivision divmod(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const Variable var = num.degree() > 0 ? num.variable() : den.variable();
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {RationalPoly({}, var), num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational& lead = den.leading();
  Rational factor;
  for (int k = num.degree(); k >= dd; --k) {
    if (rem[k] == 0) continue;
    factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPoly(std::move(quot), var), RationalPoly(std::move(rem), var)};
}

namespace {

using IntPoly = std::vector<Integer>;

IntPoly to_int_poly(RationalPoly p) {
  p.make_primitive();
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num());
  return out;
}

void make_primitive(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return;
  Integer g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Primitive polynomial remainder sequence gcd.
RationalPoly integer_gcd(const RationalPoly& a, const RationalPoly& b, Variable var) {
  IntPoly x = to_int_poly(a);
  IntPoly y = to_int_poly(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(x.size());
  for (const auto& c : x) coeffs.emplace_back(c);
  RationalPoly g(std::move(coeffs), var);
  if (!g.is_zero()) g *= Rational(1) / g.leading();
  return g;
}

// r such that p = lc * (v - r)^deg, if p has that shape and deg >= 1.
std::optional<Rational> linear_power_root(const RationalPoly& p) {
  const int d = p.degree();
  if (d < 1) return std::nullopt;
  Rational root = -p.coeff(d - 1) / (p.leading() * d);
  root.canonicalize();
  // Coefficient k of lc (v - r)^d is lc C(d, k) (-r)^(d-k).
  Rational neg_root = -root;
  Rational power(1);
  for (int k = d; k >= 0; --k) {
    Rational expected = p.leading() * Rational(binomial(d, k)) * power;
    if (expected != p.coeff(k)) return std::nullopt;
    power *= neg_root;
  }
  return root;
}

// Divides by (v - root) once; remainder must be zero.
RationalPoly deflate(const RationalPoly& p, const Rational& root) {
  const int d = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(d));
  Rational carry(0);
  for (int k = d; k >= 1; --k) {
    carry = carry * root + p.coeff(k);
    q[k - 1] = carry;
  }
  return RationalPoly(std::move(q), p.variable());
}

// Cancels the common factors of (num, den) when `power` = lc (v - r)^d.
void strip_linear_power(RationalPoly& other, RationalPoly& power, const Rational& root) {
  while (power.degree() > 0 && !other.is_zero() && other(root) == 0) {
    other = deflate(other, root);
    power = deflate(power, root);
  }
}

}  // namespace

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  const Variable var = a.degree() > 0 ? a.variable() : b.variable();
  if (a.is_zero() && b.is_zero()) return RationalPoly({}, var);
  if (a.is_zero()) return b * (Rational(1) / b.leading());
  if (b.is_zero()) return a * (Rational(1) / a.leading());
  return integer_gcd(a, b, var);
}

RationalPoly compose(const RationalPoly& p, const RationalPoly& inner) {
  RationalPoly result({}, inner.variable());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    result *= inner;
    result += RationalPoly::constant(*it, inner.variable());
  }
  return result.relabeled(inner.variable());
}

RationalPoly homogenize(const RationalPoly& p, const RationalPoly& num, const RationalPoly& den,
                        unsigned d) {
  if (p.degree() > static_cast<int>(d)) {
    throw std::invalid_argument("homogenize: degree exceeds the requested homogeneous degree");
  }
  const Variable var = num.degree() > 0 ? num.variable() : den.variable();
  std::vector<RationalPoly> num_pows{RationalPoly::constant(Rational(1), var)};
  std::vector<RationalPoly> den_pows{RationalPoly::constant(Rational(1), var)};
  for (unsigned k = 1; k <= d; ++k) {
    num_pows.push_back(num_pows.back() * num);
    den_pows.push_back(den_pows.back() * den);
  }
  RationalPoly out({}, var);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    out += p.coeffs()[k] * (num_pows[k] * den_pows[d - k]);
  }
  return out.relabeled(var);
}

// ---------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(RationalPoly num)
    : num_(std::move(num)), den_(RationalPoly::constant(Rational(1), num_.variable())) {}

RationalFn::RationalFn(RationalPoly num, RationalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFn::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Variable var = num_.degree() > 0 ? num_.variable() : den_.variable();
  if (num_.is_zero()) {
    num_ = RationalPoly({}, var);
    den_ = RationalPoly::constant(Rational(1), var);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    if (auto root = linear_power_root(den_)) {
      strip_linear_power(num_, den_, *root);
    } else if (auto root_num = linear_power_root(num_)) {
      strip_linear_power(den_, num_, *root_num);
    } else {
      const RationalPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
      }
    }
  }
  const Rational factor = den_.make_primitive();
  num_ *= factor;
  num_ = num_.relabeled(var);
  den_ = den_.relabeled(var);
}

Rational RationalFn::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d == 0) throw DomainError("rational function evaluated at a pole: " + sqsum::to_string(at));
  Rational out = num_(at) / d;
  out.canonicalize();
  return out;
}

double RationalFn::operator()(double at) const { return num_(at) / den_(at); }

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

bool RationalFn::operator==(const RationalFn& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFn compose(const RationalPoly& p, const RationalFn& g) {
  if (p.is_zero()) return RationalFn(RationalPoly({}, g.variable()));
  const auto d = static_cast<unsigned>(p.degree());
  return RationalFn(homogenize(p, g.num(), g.den(), d), g.den().pow(d));
}

RationalFn compose(const RationalFn& f, const RationalFn& g) {
  if (f.is_zero()) return RationalFn(RationalPoly({}, g.variable()));
  const auto dn = static_cast<unsigned>(f.num().degree());
  const auto dd = static_cast<unsigned>(f.den().degree());
  RationalPoly num = homogenize(f.num(), g.num(), g.den(), dn);
  RationalPoly den = homogenize(f.den(), g.num(), g.den(), dd);
  if (dd >= dn) {
    num *= g.den().pow(dd - dn);
  } else {
    den *= g.den().pow(dn - dd);
  }
  return RationalFn(std::move(num), std::move(den));
}

}  // namespace sqsum
