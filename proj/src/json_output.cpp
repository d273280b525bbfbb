#include "maxaccel/json_output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "maxaccel/errors.hpp"

namespace maxaccel::json_output {

Json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return std::strtod(buf, nullptr);
}

Json value_with_unit(double v, std::string_view unit) {
    Json j;
    j["value"] = number(v);
    j["unit"] = std::string(unit);
    return j;
}

Json quantity(const Quantity& q, std::string_view cgs_unit) {
    Json j;
    j["cgs"] = value_with_unit(q.value(), cgs_unit);
    try {
        const DisplayValue si = to_si(q);
        j["si"] = value_with_unit(si.value, si.unit);
    } catch (const LookupError&) {
        j["si"] = nullptr;
    }
    return j;
}

Json bound_report(const BoundReport& report, std::string_view cgs_unit) {
    Json j;
    j["label"] = report.label;
    j["lhs"] = quantity(report.lhs, cgs_unit);
    j["relation"] = to_string(report.relation);
    j["rhs"] = quantity(report.rhs, cgs_unit);
    j["satisfied"] = report.satisfied;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace maxaccel::json_output
