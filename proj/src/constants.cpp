#include "maxaccel/constants.hpp"

#include <cmath>
#include <sstream>

#include "maxaccel/embedded/constants.hpp"
#include "maxaccel/errors.hpp"
#include "text_table.hpp"

namespace maxaccel {

ConstantsTable ConstantsTable::parse(std::string_view text) {
    ConstantsTable table;
    for (const auto& row : detail::table_rows(text)) {
        if (row.fields.size() < 3) {
            throw ParseError("constants table line " + std::to_string(row.line) +
                             ": expected 'key value unit [source]'");
        }
        ConstantEntry entry;
        entry.name = row.fields[0];
        const double v = detail::parse_double(row.fields[1], row.line);
        entry.unit = row.fields[2];
        entry.value = Quantity{v, parse_cgs_unit(entry.unit)};
        entry.source = row.rest_after(3);
        table.entries_.push_back(std::move(entry));
    }

    auto derive = [&](std::string name, Quantity value, std::string unit, std::string source) {
        require_same_dimension(value.dimension(), parse_cgs_unit(unit), name);
        table.entries_.push_back({std::move(name), value, std::move(unit), std::move(source), true});
    };
    const Quantity e = table.get("e");
    const Quantity hbar = table.get("hbar");
    const Quantity m_e = table.get("m_e");
    const Quantity c = table.get("c");
    const Quantity G = table.get("G");
    derive("mu_B", e * hbar / (2.0 * m_e * c), "erg/G", "derived: e hbar / (2 m_e c)");
    derive("m_P", sqrt(hbar * c / G), "g", "derived: (hbar c / G)^(1/2)");
    return table;
}

const ConstantsTable& ConstantsTable::pinned() {
    static const ConstantsTable table = parse(embedded::constants_txt);
    return table;
}

const Quantity& ConstantsTable::get(std::string_view name) const {
    for (const auto& entry : entries_) {
        if (entry.name == name) return entry.value;
    }
    throw LookupError("unknown constant '" + std::string(name) + "'");
}

Quantity constant(std::string_view name) { return ConstantsTable::pinned().get(name); }

const PhysicalConstants& constants() {
    static const PhysicalConstants k = [] {
        const auto& t = ConstantsTable::pinned();
        return PhysicalConstants{
            t.get("hbar").in(dim::action),
            t.get("c").in(dim::velocity),
            t.get("e").in(dim::charge),
            t.get("m_e").in(dim::mass),
            t.get("m_p").in(dim::mass),
            t.get("k_B").in(dim::heat_capacity),
            t.get("G").in(dim::gravitational),
            t.get("eV").in(dim::energy),
            t.get("mu_B").in(dim::magnetic_moment),
            t.get("m_P").in(dim::mass),
        };
    }();
    return k;
}

}  // namespace maxaccel
