#include "sqsum/cli.hpp"

#include "sqsum/analysis.hpp"
#include "sqsum/bounds.hpp"
#include "sqsum/evalnum.hpp"
#include "sqsum/exactalg.hpp"
#include "sqsum/legendre.hpp"
#include "sqsum/serialize.hpp"

#include "CLI11.hpp"

#include <fmt/format.h>
#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>

#ifndef SQSUM_VERSION
#define SQSUM_VERSION "0.0.0"
#endif

namespace sqsum::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

constexpr double kBoundTolerance = 1e-12;

struct Options {
  std::string family;
  std::string c;
  std::string n;
  std::string x;
  std::string grid;
  double rtol = kDefaultRtol;
  std::string format;
  unsigned n_max = 10;
  std::string kind;
  double h = 0.0;
  int stencil = 5;
};

enum class Format { Text, Csv, Json };

Format resolve_format(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  if (o.format == "text") return Format::Text;
  if (o.format == "csv") return Format::Csv;
  return Format::Json;
}

FamilyId resolve_family(const Options& o) {
  std::optional<Rational> c;
  if (!o.c.empty()) c = parse_rational(o.c);
  if (o.family.empty()) {
    if (!c) throw std::invalid_argument("give --family or -c");
    return FamilyId::general(*c);
  }
  if (c && o.family != "general") throw std::invalid_argument("-c is only used with --family general");
  return FamilyId::parse(o.family, c);
}

Rational resolve_n(const Options& o) {
  if (o.n.empty()) throw std::invalid_argument("missing -n");
  Rational n = parse_rational(o.n);
  n.canonicalize();
  return n;
}

void check_admissible(const FamilyId& f, const Rational& n) {
  if (!f.admits(n)) {
    throw ParamError(fmt::format("n = {} is not admissible for family {}", to_string(n), f.name()));
  }
}

void check_in(const Interval& dom, double x, const std::string& what) {
  if (!dom.contains(x)) {
    throw DomainError(fmt::format("x = {} lies outside {} = {}", format_double(x), what, dom.to_string()));
  }
}

// a:b:count
std::vector<double> parse_grid(const std::string& spec, const Interval& dom, const std::string& what) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("grid must look like a:b:count, got '" + spec + "'");
  }
  const double a = to_double(parse_rational(spec.substr(0, first)));
  const double b = to_double(parse_rational(spec.substr(first + 1, second - first - 1)));
  const std::string count_text = spec.substr(second + 1);
  std::size_t used = 0;
  long count = 0;
  try {
    count = std::stol(count_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != count_text.size() || count < 2) {
    throw std::invalid_argument("grid count must be an integer >= 2, got '" + count_text + "'");
  }
  if (!(a < b)) throw std::invalid_argument("grid endpoints must satisfy a < b");
  check_in(dom, a, what);
  check_in(dom, b, what);
  std::vector<double> grid;
  for (long i = 0; i < count; ++i) {
    grid.push_back(i + 1 == count ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return grid;
}

// Points from -x or --grid; `fallback` when neither is given (empty: required).
std::vector<double> resolve_points(const Options& o, const Interval& dom, const std::string& what,
                                   const std::function<std::vector<double>()>& fallback = {}) {
  if (!o.x.empty() && !o.grid.empty()) throw std::invalid_argument("give -x or --grid, not both");
  if (!o.x.empty()) {
    const double x = to_double(parse_rational(o.x));
    check_in(dom, x, what);
    return {x};
  }
  if (!o.grid.empty()) return parse_grid(o.grid, dom, what);
  if (fallback) return fallback();
  throw std::invalid_argument("missing -x or --grid");
}

Json versions() { return Json{{"sqsum", SQSUM_VERSION}, {"gmp", gmp_version}}; }

Json family_params(const FamilyId& f, const std::optional<Rational>& n) {
  Json j{{"family", f.name()}};
  if (f.tag == Family::General) j["c"] = to_json(f.c);
  if (n) {
    j["n"] = to_json(*n);
    j["domain"] = f.domain(*n).to_string();
  }
  return j;
}

std::string num(double v) { return format_double(v); }

// ---------------------------------------------------------------------------

int cmd_eval(const Options& o, bool grid_required, std::ostream& out) {
  const FamilyId f = resolve_family(o);
  const Rational n = resolve_n(o);
  check_admissible(f, n);
  if (!(o.rtol > 0)) throw std::invalid_argument("--rtol must be positive");
  const Interval dom = f.domain(n);
  if (grid_required && o.grid.empty()) throw std::invalid_argument("table needs --grid");
  const std::vector<double> points = resolve_points(o, dom, "the " + f.name() + " domain");
  const Params params = f.underlying(n);
  const Format format = resolve_format(o, grid_required ? Format::Csv : Format::Text);

  struct Row {
    double x;
    EvalResult r;
  };
  std::vector<Row> rows;
  for (double x : points) {
    double mapped = f.map_argument(x);
    if (params.c() < 0) mapped = std::min(mapped, params.domain().hi);
    rows.push_back({x, s_series(params, mapped, o.rtol)});
    rows.push_back({x, s_closed(params, mapped, o.rtol)});
    rows.push_back({x, s_quad(params, mapped, 16, o.rtol)});
  }

  switch (format) {
    case Format::Csv:
      out << "x,method,value,err_estimate\n";
      for (const Row& row : rows) {
        out << num(row.x) << ',' << to_string(row.r.method) << ',' << num(row.r.value) << ','
            << num(row.r.err_estimate) << '\n';
      }
      break;
    case Format::Json: {
      Json results = Json::array();
      for (const Row& row : rows) {
        Json j{{"x", row.x}};
        j.update(to_json(row.r));
        results.push_back(std::move(j));
      }
      Json doc{{"command", grid_required ? "table" : "eval"},
               {"params", family_params(f, n)},
               {"results", std::move(results)},
               {"versions", versions()}};
      doc["params"]["rtol"] = o.rtol;
      out << dump(doc) << '\n';
      break;
    }
    case Format::Text:
      out << fmt::format("{} n={} on {}\n", f.name(), to_string(n), dom.to_string());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i % 3 == 0) out << "x = " << num(rows[i].x) << '\n';
        const EvalResult& r = rows[i].r;
        out << fmt::format("  {:<10} {:<24} err {:<12.3e} {} {}\n", to_string(r.method), num(r.value),
                           r.err_estimate, r.method == Method::Quadrature ? "nodes" : "terms",
                           r.terms_or_nodes);
      }
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

class CheckList {
 public:
  Check& get(const std::string& name) {
    for (Check& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back({name, true, ""});
    return checks_.back();
  }

  void record(const std::string& name, bool ok, const std::string& where) {
    Check& c = get(name);
    if (!ok && c.ok) {
      c.ok = false;
      c.detail = "first failure at " + where;
    }
  }

  const std::vector<Check>& all() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

const std::vector<Rational>& sample_points() {
  static const std::vector<Rational> pts = {Rational(0), Rational(1, 10), Rational(1, 4), Rational(2, 5)};
  return pts;
}

void verify_bernstein(unsigned n_max, CheckList& checks) {
  std::vector<double> mono_grid;
  for (int i = 0; i <= 64; ++i) mono_grid.push_back(i / 64.0);
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::string at = fmt::format("n={}", n);
    const RationalPoly f = f_poly_direct(n);
    const RationalPoly ps = f_poly_parseval(n);
    checks.record("parseval", s_to_x(ps) == f, at);
    bool positive = true;
    for (std::size_t k = 0; k < ps.coeffs().size(); ++k) {
      positive = positive && (k % 2 == 1 ? ps.coeff(k) == 0 : ps.coeff(k) > 0);
    }
    checks.record("convexity", positive, at);
    checks.record("recurrences", recurrence_check(n), at);
    checks.record("ode", ode_residual_poly(RationalFn(f), Ode::eq_f(n)).is_zero(), at);
    const HeunParams hp = HeunParams::for_operator(Params::make(Rational(n), Rational(-1)));
    checks.record("heun", heun_residual(RationalFn(f), hp).is_zero(), at);
    bool bridge = true;
    for (const Rational& x : sample_points()) bridge = bridge && neuschel_check_exact(n, x);
    for (const Rational& t : {Rational(2), Rational(5, 4)}) {
      bridge = bridge && derivative_relations_check(n, t) && legendre_from_binom(n, t) == legendre_p(n, t);
    }
    checks.record("legendre", bridge, at);
    checks.record("monotonicity", monotonicity_check(n, mono_grid).status == "pass", at);
  }
}

void verify_baskakov(unsigned n_max, CheckList& checks) {
  const RationalFn x(RationalPoly::linear(Rational(0), Rational(1)));
  const RationalFn one(RationalPoly::constant(Rational(1)));
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::string at = fmt::format("n={}", n);
    const RationalFn g = g_rational(n);
    checks.record("ode", ode_residual_poly(g, Ode::eq_g(n)).is_zero(), at);
    const HeunParams hp = HeunParams::for_operator(Params::make(Rational(n), Rational(1)));
    checks.record("heun", heun_residual(g, hp, ArgTransform::negate_arg()).is_zero(), at);
    checks.record("substitution", g == compose(j_rational(n - 1), x / (one + x)), at);
  }
}

void verify_mkz(unsigned n_max, CheckList& checks) {
  const RationalFn x(RationalPoly::linear(Rational(0), Rational(1)));
  const RationalFn one(RationalPoly::constant(Rational(1)));
  for (unsigned n = 0; n <= n_max; ++n) {
    const std::string at = fmt::format("n={}", n);
    const RationalFn j = j_rational(n);
    checks.record("ode", ode_residual_poly(j, Ode::eq_j(n)).is_zero(), at);
    checks.record("substitution", j == compose(g_rational(n + 1), x / (one - x)), at);
  }
}

void verify_bbh(unsigned n_max, CheckList& checks) {
  const RationalFn x(RationalPoly::linear(Rational(0), Rational(1)));
  const RationalFn one(RationalPoly::constant(Rational(1)));
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::string at = fmt::format("n={}", n);
    const RationalFn series = u_rational_series(n);
    checks.record("two_routes", series == u_rational_from_parseval(n), at);
    checks.record("ode", ode_residual_poly(series, Ode::eq_u(n)).is_zero(), at);
    checks.record("substitution", series == compose(RationalFn(f_poly_direct(n)), x / (one + x)), at);
  }
}

void verify_numeric(const Rational& c, unsigned n_max, CheckList& checks) {
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(0.1 + 4.9 * i / 49.0);
  for (unsigned k = 1; k <= n_max; ++k) {
    const Params p = Params::make(Rational(k), c);
    const std::string at = p.to_string();
    const ScanReport r = ode_residual_scan(p, grid);
    checks.record("ode_scan", r.status == "pass", at);
    const EndpointSlope s = ode_endpoint_slope(p);
    checks.record("endpoint_slope", std::abs(s.slope - s.expected) <= 1e-4 * std::abs(s.expected), at);
  }
}

void verify_general_negative(const Rational& c, unsigned n_max, CheckList& checks) {
  const FamilyId f = FamilyId::general(c);
  for (unsigned l = 1; l <= n_max; ++l) {
    const Rational n = -c * l;
    const Params p = Params::make(n, c);
    const std::string at = p.to_string();
    const RationalFn y = exact_family_function(f, n);
    checks.record("ode", ode_residual_poly(y, Ode::eq_s(p)).is_zero(), at);
    checks.record("heun",
                  heun_residual(y, HeunParams::for_operator(p), ArgTransform::for_operator(p)).is_zero(),
                  at);
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FamilyId f = resolve_family(o);
  const unsigned n_max = o.n_max;
  if (n_max < 1) throw std::invalid_argument("--n-max must be at least 1");
  CheckList checks;
  std::optional<Json> exact;
  switch (f.tag) {
    case Family::Bernstein: verify_bernstein(n_max, checks); break;
    case Family::Baskakov: verify_baskakov(n_max, checks); break;
    case Family::MKZ: verify_mkz(n_max, checks); break;
    case Family::BBH: verify_bbh(n_max, checks); break;
    case Family::Szasz: verify_numeric(Rational(0), n_max, checks); break;
    case Family::General:
      if (f.c < 0) {
        verify_general_negative(f.c, n_max, checks);
      } else {
        verify_numeric(f.c, n_max, checks);
      }
      break;
  }
  const Rational n_last = f.tag == Family::General && f.c < 0 ? Rational(-f.c * n_max) : Rational(n_max);
  try {
    exact = to_json(exact_family_function(f, n_last));
  } catch (const UnsupportedError&) {
  }

  bool all_ok = true;
  for (const Check& c : checks.all()) all_ok = all_ok && c.ok;

  if (resolve_format(o, Format::Text) == Format::Json) {
    Json results = Json::array();
    for (const Check& c : checks.all()) {
      Json j{{"check", c.name}, {"status", c.ok ? "OK" : "FAIL"}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      results.push_back(std::move(j));
    }
    Json params = family_params(f, std::nullopt);
    params["n_max"] = n_max;
    Json doc{{"command", "verify"}, {"params", std::move(params)}, {"results", std::move(results)}};
    if (exact) doc["exact"] = Json{{"n", to_json(n_last)}, {"function", *exact}};
    doc["versions"] = versions();
    out << dump(doc) << '\n';
  } else if (resolve_format(o, Format::Text) == Format::Csv) {
    out << "check,status,detail\n";
    for (const Check& c : checks.all()) out << c.name << ',' << (c.ok ? "OK" : "FAIL") << ',' << c.detail << '\n';
  } else {
    for (const Check& c : checks.all()) {
      out << c.name << ": " << (c.ok ? "OK" : "FAIL");
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
    }
  }
  return all_ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

int cmd_bounds(const Options& o, std::ostream& out) {
  const FamilyId f = resolve_family(o);
  const Rational n = resolve_n(o);
  check_admissible(f, n);
  const std::vector<double> points = resolve_points(o, f.domain(n), "the " + f.name() + " domain",
                                                    [&] { return standard_grid(f, n); });
  const BoundEvaluator ev(f, n);
  std::vector<BoundReport> reports;
  double worst = std::numeric_limits<double>::infinity();
  for (double x : points) {
    reports.push_back(ev.at(x));
    worst = std::min(worst, reports.back().min_margin);
  }
  const bool ok = !(worst < -kBoundTolerance);

  switch (resolve_format(o, Format::Text)) {
    case Format::Csv:
      out << "x,s_value,bound,value,margin\n";
      for (const BoundReport& r : reports) {
        for (const BoundValue& b : r.bounds) {
          out << num(r.x) << ',' << num(r.s_value) << ',' << b.label << ',' << num(b.value) << ','
              << num(b.margin) << '\n';
        }
      }
      break;
    case Format::Json: {
      Json list = Json::array();
      for (const BoundReport& r : reports) list.push_back(to_json(r));
      Json doc{{"command", "bounds"},
               {"params", family_params(f, n)},
               {"report", Json{{"tolerance", kBoundTolerance},
                               {"min_margin", worst},
                               {"status", ok ? "pass" : "fail"},
                               {"points", std::move(list)}}},
               {"versions", versions()}};
      out << dump(doc) << '\n';
      break;
    }
    case Format::Text:
      out << fmt::format("{} n={} on {}\n", f.name(), to_string(n), f.domain(n).to_string());
      for (const BoundReport& r : reports) {
        out << "x=" << num(r.x) << " s=" << num(r.s_value);
        for (const BoundValue& b : r.bounds) {
          out << "  " << b.label << ": bound=" << num(b.value) << " margin=" << num(b.margin);
        }
        for (const std::string& note : r.notes) out << "  (" << note << ')';
        out << '\n';
      }
      out << "min margin " << num(worst) << (ok ? "  OK" : "  FAIL") << '\n';
      break;
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

Params scan_params(const FamilyId& f, const Rational& n) {
  if (f.tag == Family::BBH || f.tag == Family::MKZ) {
    throw std::invalid_argument("this scan needs a family of the form S_{n,c}; use bernstein, szasz, "
                                "baskakov or general");
  }
  return f.underlying(n);
}

int cmd_scan(const Options& o, std::ostream& out) {
  const FamilyId f = resolve_family(o);
  ScanReport report;
  std::optional<Rational> n;
  if (o.kind == "monotonicity") {
    if (f.tag != Family::Bernstein) throw std::invalid_argument("monotonicity scan is for --family bernstein");
    n = resolve_n(o);
    check_admissible(f, *n);
    const std::vector<double> grid = resolve_points(o, Interval{0.0, 1.0, false}, "[0, 1]", [] {
      std::vector<double> g;
      for (int i = 0; i <= 256; ++i) g.push_back(i / 256.0);
      return g;
    });
    report = monotonicity_check(static_cast<unsigned>(n->get_num().get_ui()), grid);
  } else {
    n = resolve_n(o);
    check_admissible(f, *n);
    if (o.kind == "ode") {
      const Params p = scan_params(f, *n);
      const Interval dom = p.domain();
      const std::vector<double> grid = resolve_points(o, dom, "I_c", [&] {
        const double hi = dom.bounded() ? 0.9 * dom.hi : 5.0;
        const double lo = dom.bounded() ? 0.1 * dom.hi : 0.1;
        std::vector<double> g;
        for (int i = 0; i < 64; ++i) g.push_back(lo + (hi - lo) * i / 63.0);
        return g;
      });
      OdeScanOptions opt;
      opt.h = o.h;
      opt.stencil = o.stencil == 3 ? Stencil::ThreePoint : Stencil::FivePoint;
      report = ode_residual_scan(p, grid, opt);
    } else if (o.kind == "convexity") {
      const std::vector<double> grid = resolve_points(o, f.domain(*n), "the " + f.name() + " domain",
                                                      [&] { return interior_grid(f, *n, 256); });
      report = convexity_scan(f, *n, grid);
    } else {
      const Params p = scan_params(f, *n);
      std::vector<Rational> grid;
      if (o.x.empty() && o.grid.empty()) {
        grid = conjecture_grid(p);
      } else {
        for (double x : resolve_points(o, p.domain(), "I_c")) grid.push_back(to_rational(x));
      }
      report = logconvexity_scan(p, grid);
    }
  }

  switch (resolve_format(o, Format::Text)) {
    case Format::Csv:
      out << "x,margin\n";
      for (std::size_t i = 0; i < report.grid.size(); ++i) {
        out << num(report.grid[i]) << ',' << num(report.margins[i]) << '\n';
      }
      break;
    case Format::Json: {
      Json doc{{"command", "scan"},
               {"params", family_params(f, n)},
               {"report", to_json(report)},
               {"versions", versions()}};
      out << dump(doc) << '\n';
      break;
    }
    case Format::Text:
      out << fmt::format("{} scan, {}: {} points, status {}\n", to_string(report.kind), report.label,
                         report.grid.size(), report.status);
      out << "min margin " << num(report.min_margin) << " at x=" << num(report.argmin) << '\n';
      out << "max margin " << num(report.max_margin) << " at x=" << num(report.argmax) << '\n';
      out << "violations " << report.violations.size() << '\n';
      for (const Violation& v : report.violations) {
        out << "  x=" << num(v.x) << " margin=" << num(v.margin) << '\n';
      }
      for (const std::string& note : report.notes) out << "note: " << note << '\n';
      break;
  }
  // A completed scan never fails the process.
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_info(const Options& o, std::ostream& out) {
  const FamilyId f = resolve_family(o);
  std::optional<Rational> n;
  if (!o.n.empty()) n = resolve_n(o);
  Json doc{{"command", "info"}, {"params", family_params(f, std::nullopt)}};
  Json info{{"family", f.name()}, {"c", to_json(f.c)}};
  switch (f.tag) {
    case Family::BBH: info["relation"] = "U_n(x) = F_n(x/(1+x))"; break;
    case Family::MKZ: info["relation"] = "J_n(x) = G_{n+1}(x/(1-x))"; break;
    default: info["relation"] = "S_{n,c}"; break;
  }
  if (n) {
    const bool ok = f.admits(*n);
    info["n"] = to_json(*n);
    info["admissible"] = ok;
    if (ok) {
      info["domain"] = f.domain(*n).to_string();
      info["underlying"] = to_json(f.underlying(*n));
      bool has_exact = true;
      try {
        (void)exact_family_function(f, *n);
      } catch (const UnsupportedError&) {
        has_exact = false;
      }
      info["exact_form"] = has_exact;
      Json labels = Json::array();
      const double probe = f.domain(*n).lo;
      for (const BoundValue& b : bound_values(f, *n, probe).bounds) labels.push_back(b.label);
      info["bounds"] = std::move(labels);
    }
  }
  doc["results"] = info;
  doc["versions"] = versions();

  if (resolve_format(o, Format::Text) == Format::Json) {
    out << dump(doc) << '\n';
    return kOk;
  }
  for (const auto& [key, value] : info.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : dump(value, -1)) << '\n';
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool with_n, bool with_points) {
  sub->add_option("--family", o.family, "bernstein|szasz|baskakov|bbh|mkz|general");
  sub->add_option("-c", o.c, "family parameter for --family general (rational, e.g. -1/2)");
  if (with_n) sub->add_option("-n", o.n, "operator index (rational)");
  if (with_points) {
    sub->add_option("-x", o.x, "evaluation point");
    sub->add_option("--grid", o.grid, "a:b:count");
  }
  sub->add_option("--format", o.format, "text|csv|json")->check(CLI::IsMember({"text", "csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Sums of squared fundamental functions of positive linear operators", "sqsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SQSUM_VERSION);

  CLI::App* eval = app.add_subcommand("eval", "evaluate S by series, closed form and quadrature");
  add_common(eval, o, true, true);
  eval->add_option("--rtol", o.rtol, "relative tolerance");

  CLI::App* table = app.add_subcommand("table", "tabulate S on a grid (csv by default)");
  add_common(table, o, true, true);
  table->add_option("--rtol", o.rtol, "relative tolerance");

  CLI::App* verify = app.add_subcommand("verify", "run the exact identity checks for a family");
  add_common(verify, o, false, false);
  verify->add_option("--n-max", o.n_max, "largest index checked");

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate the upper bounds and their margins");
  add_common(bounds, o, true, true);

  CLI::App* scan = app.add_subcommand("scan", "ODE residual, convexity, log-convexity or monotonicity scan");
  add_common(scan, o, true, true);
  scan->add_option("--kind", o.kind, "ode|convexity|logconvexity|monotonicity")
      ->required()
      ->check(CLI::IsMember({"ode", "convexity", "logconvexity", "monotonicity"}));
  scan->add_option("--step", o.h, "finite-difference step for --kind ode (default max(1e-4, 1e-4 x))");
  scan->add_option("--stencil", o.stencil, "3 or 5 point stencil for --kind ode")->check(CLI::IsMember({3, 5}));

  CLI::App* info = app.add_subcommand("info", "classify a family and echo its parameters");
  add_common(info, o, true, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SQSUM_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, false, out);
    if (table->parsed()) return cmd_eval(o, true, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
    if (info->parsed()) return cmd_info(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sqsum::cli
