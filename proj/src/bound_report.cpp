#include "maxaccel/bound_report.hpp"

#include <utility>

namespace maxaccel {

double BoundReport::margin() const {
    const double diff = rhs.value() - lhs.value();
    return relation == Relation::LessEqual ? diff : -diff;
}

BoundReport make_report(std::string label, Quantity lhs, Relation relation, Quantity rhs,
                        double slack) {
    require_same_dimension(lhs.dimension(), rhs.dimension(), label);
    BoundReport report{std::move(label), lhs, rhs, relation, false};
    report.satisfied = report.margin() >= -slack;
    return report;
}

const char* to_string(Relation r) { return r == Relation::LessEqual ? "<=" : ">="; }

}  // namespace maxaccel
