#include "maxaccel/materials.hpp"

#include <cmath>
#include <numbers>

#include "maxaccel/constants.hpp"
#include "maxaccel/embedded/materials.hpp"
#include "maxaccel/errors.hpp"
#include "text_table.hpp"

namespace maxaccel::london {

void Material::validate() const {
    auto check = [&](const Quantity& q, const Dimension& d, const char* what) {
        require_same_dimension(q.dimension(), d, std::string("material ") + what);
        if (!(q.value() > 0.0) || !std::isfinite(q.value())) {
            throw DomainError("material '" + name + "': " + what + " must be positive");
        }
    };
    check(mass, dim::mass, "mass");
    check(charge, dim::charge, "charge");
    check(density, dim::number_density, "density");
    check(critical_field, dim::field, "critical field");
    check(critical_temperature, dim::temperature, "critical temperature");
    check(fermi_energy, dim::energy, "Fermi energy");
}

Material Material::electron_gas(std::string name, Quantity density, Quantity critical_field,
                                Quantity critical_temperature, Quantity fermi_energy) {
    Material m{std::move(name), constant("m_e"),   constant("e"), density, critical_field,
               critical_temperature, fermi_energy, {}};
    m.validate();
    return m;
}

Material Material::from_penetration_depth(std::string name, Quantity penetration_depth,
                                          Quantity critical_field, Quantity critical_temperature,
                                          Quantity fermi_energy) {
    require_same_dimension(penetration_depth.dimension(), dim::length, "penetration depth");
    if (!(penetration_depth.value() > 0.0)) throw DomainError("penetration depth must be positive");
    const Quantity c = constant("c");
    const Quantity e = constant("e");
    const Quantity inv_depth_sq = 1.0 / (penetration_depth * penetration_depth);
    const Quantity density =
        inv_depth_sq * constant("m_e") * c * c / (4.0 * std::numbers::pi * e * e);
    return electron_gas(std::move(name), density, critical_field, critical_temperature,
                        fermi_energy);
}

Material Material::as_cooper_pairs() const {
    Material pair = *this;
    pair.name = name + " (pairs)";
    pair.mass = 2.0 * mass;
    pair.charge = 2.0 * charge;
    pair.density = density / 2.0;
    return pair;
}

Quantity Material::bohr_magneton() const {
    return charge * constant("hbar") / (2.0 * mass * constant("c"));
}

MaterialCatalog MaterialCatalog::parse(std::string_view text) {
    MaterialCatalog catalog;
    for (const auto& row : detail::table_rows(text)) {
        if (row.fields.size() < 5) {
            throw ParseError("materials line " + std::to_string(row.line) +
                             ": expected 'name n B_c T_c eps_F_eV [source]'");
        }
        const double n = detail::parse_double(row.fields[1], row.line);
        const double bc = detail::parse_double(row.fields[2], row.line);
        const double tc = detail::parse_double(row.fields[3], row.line);
        const double ef_ev = detail::parse_double(row.fields[4], row.line);
        Material m = Material::electron_gas(
            row.fields[0], {n, dim::number_density}, {bc, dim::field}, {tc, dim::temperature},
            from_si({ef_ev, "eV"}));
        m.source = row.rest_after(5);
        catalog.materials_.push_back(std::move(m));
    }
    return catalog;
}

const MaterialCatalog& MaterialCatalog::presets() {
    static const MaterialCatalog catalog = parse(embedded::materials_txt);
    return catalog;
}

const Material& MaterialCatalog::find(std::string_view name) const {
    for (const auto& m : materials_) {
        if (m.name == name) return m;
    }
    std::string known;
    for (const auto& m : materials_) known += (known.empty() ? "" : ", ") + m.name;
    throw LookupError("unknown material '" + std::string(name) + "' (known: " + known + ")");
}

Material reconstruction_material() {
    Material m = Material::from_penetration_depth(
        "reconstruction", {5e-6, dim::length}, {500.0, dim::field}, {3.7, dim::temperature},
        {4.5e-12, dim::energy});
    m.source = "reconstructed; London depth 5.0e-6 cm, eps_F = 4.5e-12 erg";
    return m;
}

Quantity beta(const Material& material) {
    const Quantity c = constant("c");
    return sqrt(4.0 * std::numbers::pi * material.density * material.charge * material.charge /
                (material.mass * c * c));
}

Quantity penetration_depth(const Material& material) { return 1.0 / beta(material); }

}  // namespace maxaccel::london
