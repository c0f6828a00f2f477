#pragma once

// JSON forms of the library's values. Rationals are "p/q" strings; doubles
// are written with 17 significant digits by dump().

#include "sqsum/analysis.hpp"
#include "sqsum/bounds.hpp"
#include "sqsum/evalnum.hpp"
#include "sqsum/poly.hpp"

#include "json.hpp"

#include <string>

namespace sqsum {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const RationalPoly& poly);
Json to_json(const RationalFn& fn);
Json to_json(const Params& params);
Json to_json(const EvalResult& result);
Json to_json(const BoundReport& report);
Json to_json(const ScanReport& report);

RationalPoly poly_from_json(const Json& j);
RationalFn fn_from_json(const Json& j);

/// Compact serialization with "%.17g" numbers; non-finite numbers become null.
std::string dump(const Json& j, int indent = 2);

/// "%.17g".
std::string format_double(double value);

}  // namespace sqsum
