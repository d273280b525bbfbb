#pragma once

// Deterministic JSON: fixed key order (ordered_json) and every float rounded
// to 12 significant digits before serialization.

#include <json.hpp>
#include <string_view>

#include "maxaccel/bound_report.hpp"
#include "maxaccel/units.hpp"

namespace maxaccel::json_output {

using Json = nlohmann::ordered_json;

/// Rounded to 12 significant digits; non-finite values become null.
Json number(double v);

/// {"value": v, "unit": unit}
Json value_with_unit(double v, std::string_view unit);

/// Quantity in its canonical CGS unit label plus, when registered, its SI
/// default: {"cgs": {...}, "si": {...}}.
Json quantity(const Quantity& q, std::string_view cgs_unit);

Json bound_report(const BoundReport& report, std::string_view cgs_unit);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace maxaccel::json_output
