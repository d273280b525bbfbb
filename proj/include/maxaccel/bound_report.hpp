#pragma once

#include <string>

#include "maxaccel/units.hpp"

namespace maxaccel {

enum class Relation { LessEqual, GreaterEqual };

/// One evaluated inequality `lhs <relation> rhs`.
struct BoundReport {
    std::string label;
    Quantity lhs;
    Quantity rhs;
    Relation relation = Relation::LessEqual;
    bool satisfied = false;

    /// Signed distance from violation, in lhs units: positive when satisfied.
    double margin() const;
};

/// Builds a report and evaluates it. `slack` (absolute, in lhs units) is
/// granted to the inequality before it is declared violated. Throws
/// DimensionError if lhs and rhs differ in dimension.
BoundReport make_report(std::string label, Quantity lhs, Relation relation, Quantity rhs,
                        double slack = 0.0);

const char* to_string(Relation r);

}  // namespace maxaccel
