#include "sqsum/serialize.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace sqsum {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const RationalPoly& poly) {
  Json coeffs = Json::array();
  for (const Rational& c : poly.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"variable", to_string(poly.variable())}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const RationalFn& fn) {
  return Json{{"num", to_json(fn.num())}, {"den", to_json(fn.den())}};
}

RationalPoly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return RationalPoly(std::move(coeffs), parse_variable(j.at("variable").get<std::string>()));
}

RationalFn fn_from_json(const Json& j) {
  return RationalFn(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json to_json(const Params& params) {
  Json j{{"n", to_json(params.n_exact())}, {"c", to_json(params.c_exact())}};
  if (params.l()) j["l"] = *params.l();
  j["domain"] = params.domain().to_string();
  return j;
}

Json to_json(const EvalResult& result) {
  return Json{{"method", to_string(result.method)},
              {"value", result.value},
              {"err_estimate", result.err_estimate},
              {"terms_or_nodes", result.terms_or_nodes}};
}

Json to_json(const BoundReport& report) {
  Json bounds = Json::array();
  for (const BoundValue& b : report.bounds) {
    bounds.push_back(
        Json{{"label", b.label}, {"value", b.value}, {"margin", b.margin}, {"exact", b.exact}});
  }
  Json j{{"x", report.x},
         {"s_value", report.s_value},
         {"s_exact", report.s_exact},
         {"bounds", std::move(bounds)},
         {"min_margin", report.min_margin}};
  j["notes"] = report.notes.empty() ? Json::array() : Json(report.notes);
  return j;
}

Json to_json(const ScanReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) violations.push_back(Json{{"x", v.x}, {"margin", v.margin}});
  Json j{{"kind", to_string(report.kind)},
         {"label", report.label},
         {"status", report.status},
         {"exact", report.exact},
         {"tolerance", report.tolerance},
         {"min_margin", report.min_margin},
         {"argmin", report.argmin},
         {"max_margin", report.max_margin},
         {"argmax", report.argmax},
         {"grid", report.grid},
         {"margins", report.margins},
         {"violations", std::move(violations)}};
  j["notes"] = report.notes.empty() ? Json::array() : Json(report.notes);
  return j;
}

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

namespace {

void write(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        write(value, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const Json& value : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(value, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default: out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

}  // namespace sqsum
