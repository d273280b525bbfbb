#include "maxaccel/units.hpp"

#include <cmath>
#include <utility>

#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"

namespace maxaccel {

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Dimension::to_string() const {
    std::string out;
    auto append = [&](const char* sym, Rational e) {
        if (e.is_zero()) return;
        if (!out.empty()) out += ' ';
        out += sym;
        if (!(e == Rational{1})) {
            out += '^';
            out += e.to_string();
        }
    };
    append("g", mass);
    append("cm", length);
    append("s", time);
    append("K", temperature);
    return out.empty() ? "1" : out;
}

void require_same_dimension(const Dimension& a, const Dimension& b, std::string_view context) {
    if (a == b) return;
    throw DimensionError(std::string(context) + ": dimension mismatch [" + a.to_string() +
                         "] vs [" + b.to_string() + "]");
}

double Quantity::in(const Dimension& expected) const {
    require_same_dimension(dim_, expected, "Quantity::in");
    return value_;
}

Quantity& Quantity::operator+=(const Quantity& o) {
    require_same_dimension(dim_, o.dim_, "addition");
    value_ += o.value_;
    return *this;
}

Quantity& Quantity::operator-=(const Quantity& o) {
    require_same_dimension(dim_, o.dim_, "subtraction");
    value_ -= o.value_;
    return *this;
}

std::partial_ordering operator<=>(const Quantity& a, const Quantity& b) {
    require_same_dimension(a.dim_, b.dim_, "comparison");
    return a.value_ <=> b.value_;
}

bool operator==(const Quantity& a, const Quantity& b) {
    require_same_dimension(a.dim_, b.dim_, "comparison");
    return a.value_ == b.value_;
}

Quantity sqrt(const Quantity& q) {
    return {std::sqrt(q.value()), q.dimension().pow({1, 2})};
}

Quantity abs(const Quantity& q) { return {std::fabs(q.value()), q.dimension()}; }

Quantity pow(const Quantity& q, Rational p) {
    return {std::pow(q.value(), p.to_double()), q.dimension().pow(p)};
}

Dimension parse_cgs_unit(std::string_view unit) {
    static const std::pair<std::string_view, Dimension> kUnits[] = {
        {"1", dim::dimensionless},
        {"g", dim::mass},
        {"cm", dim::length},
        {"s", dim::time},
        {"K", dim::temperature},
        {"esu", dim::charge},
        {"erg", dim::energy},
        {"erg*s", dim::action},
        {"cm/s", dim::velocity},
        {"cm/s^2", dim::acceleration},
        {"erg/K", dim::heat_capacity},
        {"erg/G", dim::magnetic_moment},
        {"G", dim::field},
        {"statvolt/cm", dim::field},
        {"1/cm", dim::inverse_length},
        {"cm^-3", dim::number_density},
        {"cm^3/(g*s^2)", dim::gravitational},
    };
    for (const auto& [name, d] : kUnits) {
        if (name == unit) return d;
    }
    throw LookupError("unregistered CGS unit '" + std::string(unit) + "'");
}

const std::vector<DisplayUnit>& display_units() {
    static const std::vector<DisplayUnit> kUnits = [] {
        const auto& k = constants();
        // statvolt/cm -> V/m: one statvolt is c/10^8 V (c in cm/s), per cm is x100.
        const double statvolt_per_cm_in_n_per_c = k.c * 1e-6;
        const double esu_in_coulomb = 10.0 / k.c;
        return std::vector<DisplayUnit>{
            // The first entry per dimension is the default for to_si.
            {"N/C", dim::field, statvolt_per_cm_in_n_per_c},
            {"V/m", dim::field, statvolt_per_cm_in_n_per_c},
            {"T", dim::field, 1e-4},
            {"G", dim::field, 1.0},
            {"statvolt/cm", dim::field, 1.0},
            {"J", dim::energy, 1e-7},
            {"eV", dim::energy, 1.0 / k.electron_volt},
            {"erg", dim::energy, 1.0},
            {"kg", dim::mass, 1e-3},
            {"m", dim::length, 1e-2},
            {"s", dim::time, 1.0},
            {"K", dim::temperature, 1.0},
            {"m/s", dim::velocity, 1e-2},
            {"m/s^2", dim::acceleration, 1e-2},
            {"m/s^3", dim::jerk, 1e-2},
            {"J*s", dim::action, 1e-7},
            {"J/K", dim::heat_capacity, 1e-7},
            {"J/T", dim::magnetic_moment, 1e-3},
            {"C", dim::charge, esu_in_coulomb},
            {"1/m", dim::inverse_length, 1e2},
            {"m^-3", dim::number_density, 1e6},
            {"A/m^2", dim::current_density, esu_in_coulomb * 1e4},
            {"1", dim::dimensionless, 1.0},
        };
    }();
    return kUnits;
}

namespace {

const DisplayUnit& find_display_unit(std::string_view symbol) {
    for (const auto& u : display_units()) {
        if (u.symbol == symbol) return u;
    }
    throw LookupError("no display unit '" + std::string(symbol) + "'");
}

}  // namespace

DisplayValue to_si(const Quantity& q) {
    for (const auto& u : display_units()) {
        if (u.dimension == q.dimension()) return {q.value() * u.factor, u.symbol};
    }
    throw LookupError("no display unit for dimension [" + q.dimension().to_string() + "]");
}

DisplayValue to_display(const Quantity& q, std::string_view unit) {
    const auto& u = find_display_unit(unit);
    require_same_dimension(q.dimension(), u.dimension, "to_display(" + u.symbol + ")");
    return {q.value() * u.factor, u.symbol};
}

Quantity from_si(const DisplayValue& v) {
    const auto& u = find_display_unit(v.unit);
    return {v.value / u.factor, u.dimension};
}

}  // namespace maxaccel
