#include "maxaccel/london_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"
#include "stencil.hpp"

namespace maxaccel::london {

namespace {

// Radicands within this relative distance below zero are rounding, not a
// failed reality condition.
constexpr double kRadicandRoundoff = 1e-12;

double checked_sqrt(double positive, double negative) {
    const double radicand = positive - negative;
    if (radicand >= 0.0) return std::sqrt(radicand);
    if (radicand >= -kRadicandRoundoff * std::max(positive, negative)) return 0.0;
    throw DomainError(
        "reality condition violated: the square root's argument is negative (dE dv < mu_B v |B_r|)");
}

void require_nonnegative(const Quantity& q, const Dimension& d, const char* what) {
    require_same_dimension(q.dimension(), d, what);
    if (!(q.value() >= 0.0)) throw DomainError(std::string(what) + " must be >= 0");
}

}  // namespace

Carrier Carrier::electron() { return {constant("m_e"), constant("mu_B")}; }

Carrier Carrier::of(const Material& material) { return {material.mass, material.bohr_magneton()}; }

BoundReport reality_condition(const Quantity& energy_spread, const Quantity& radial_field,
                              const Carrier& carrier) {
    require_nonnegative(energy_spread, dim::energy, "energy spread");
    require_same_dimension(radial_field.dimension(), dim::field, "radial field");
    return make_report("mu_B |B_r| <= dE", carrier.bohr_magneton * abs(radial_field),
                       Relation::LessEqual, energy_spread);
}

Quantity reality_threshold(const Quantity& energy_spread, const Carrier& carrier) {
    require_nonnegative(energy_spread, dim::energy, "energy spread");
    return energy_spread / carrier.bohr_magneton;
}

Quantity er_bound_general(const Quantity& v_phi, const Quantity& radial_field,
                          const Quantity& polar_field, const Quantity& energy_spread,
                          const Quantity& velocity_spread, const Carrier& carrier) {
    require_same_dimension(v_phi.dimension(), dim::velocity, "v_phi");
    require_same_dimension(radial_field.dimension(), dim::field, "B_r");
    require_same_dimension(polar_field.dimension(), dim::field, "B_theta");
    require_nonnegative(energy_spread, dim::energy, "energy spread");
    require_nonnegative(velocity_spread, dim::velocity, "velocity spread");

    const Quantity c = constant("c");
    const Quantity drift = abs(v_phi * polar_field) / c;
    const Quantity rate = energy_spread * velocity_spread / (carrier.bohr_magneton * c);
    const Quantity lorentz = v_phi * radial_field / c;
    const double root = checked_sqrt(rate.value() * rate.value(), lorentz.value() * lorentz.value());
    return drift + Quantity{root, rate.dimension()};
}

double er_bound_general_verbatim(double v_phi, double radial_field, double polar_field,
                                 double energy_spread, double velocity_spread,
                                 const Carrier& carrier) {
    const auto& k = constants();
    const double mu_b = carrier.bohr_magneton.in(dim::magnetic_moment);
    // (2 m c / (e hbar))^2 dE^2 dv^2 with 2 m c / (e hbar) = 1 / mu_B
    const double rate = energy_spread * velocity_spread / mu_b;
    const double lorentz = v_phi * radial_field / k.c;
    return std::fabs(v_phi * polar_field) / k.c + checked_sqrt(rate * rate, lorentz * lorentz);
}

Quantity er_bound_statistical(const Material& material, const Quantity& temperature,
                              const Quantity& radial_field, const Quantity& polar_field) {
    const FermiStats stats = fermi_stats(material, temperature);
    return er_bound_general(stats.velocity_spread, radial_field, polar_field,
                            stats.energy_spread, stats.velocity_spread, Carrier::of(material));
}

double er_bound_statistical_verbatim(const Material& material, double radial_field,
                                     double polar_field) {
    const auto& k = constants();
    const double m = material.mass.in(dim::mass);
    const double ef = material.fermi_energy.in(dim::energy);
    const double mu_b = material.bohr_magneton().in(dim::magnetic_moment);
    const double prefactor = 3.0 / (2.0 * m) * std::sqrt(ef / 2.0);
    const double a = 3.0 * ef / (5.0 * mu_b);
    const double b = radial_field / k.c;
    return prefactor * (std::fabs(polar_field) / k.c + checked_sqrt(a * a, b * b));
}

Quantity er_bound_equator(const Quantity& v0, const Quantity& polar_field,
                          const Carrier& carrier) {
    require_nonnegative(v0, dim::velocity, "v0");
    require_same_dimension(polar_field.dimension(), dim::field, "B_theta");
    const Quantity c = constant("c");
    const Quantity kinetic_field = carrier.mass * v0 * v0 / (2.0 * carrier.bohr_magneton);
    return v0 / c * (abs(polar_field) + kinetic_field);
}

double er_bound_equator_verbatim(double v0, double polar_field, const Carrier& carrier) {
    const double mu_b = carrier.bohr_magneton.in(dim::magnetic_moment);
    return v0 / constants().c * (std::fabs(polar_field) + v0 * v0 / (2.0 * mu_b));
}

Quantity infer_equator_polar_field(const Quantity& v0, const Quantity& bound,
                                   const Carrier& carrier) {
    require_same_dimension(v0.dimension(), dim::velocity, "v0");
    require_same_dimension(bound.dimension(), dim::field, "E_r bound");
    if (!(v0.value() > 0.0)) throw DomainError("v0 must be positive to infer B_theta");
    const Quantity kinetic_field = carrier.mass * v0 * v0 / (2.0 * carrier.bohr_magneton);
    const Quantity polar = bound * constant("c") / v0 - kinetic_field;
    if (polar.value() < 0.0) {
        throw DomainError("bound is below the field-free equator bound; no B_theta reproduces it");
    }
    return polar;
}

Quantity surface_velocity(const Material& material, const Quantity& penetration_depth,
                          const Quantity& surface_field) {
    require_nonnegative(penetration_depth, dim::length, "penetration depth");
    require_nonnegative(surface_field, dim::field, "surface field");
    return material.charge / (material.mass * constant("c")) * penetration_depth * surface_field;
}

Quantity er_london(const Material& material, const Quantity& v0,
                   const Quantity& penetration_depth) {
    require_nonnegative(v0, dim::velocity, "v0");
    require_same_dimension(penetration_depth.dimension(), dim::length, "penetration depth");
    if (!(penetration_depth.value() > 0.0)) throw DomainError("penetration depth must be positive");
    return material.mass / material.charge * v0 * v0 / penetration_depth;
}

Quantity er_london_profile(const SphereField& field, const Material& material) {
    const double R = field.radius();
    const double h = std::min(1e-3 / field.beta(), R / 8.0);
    auto v2 = [&](double r) {
        const double v = field.v_phi(r, std::numbers::pi / 2);
        return v * v;
    };
    const double slope = detail::derivative4(v2, R, h, 0.0, R);
    const double m_over_2e = material.mass.in(dim::mass) / (2.0 * material.charge.in(dim::charge));
    return {std::fabs(m_over_2e * slope), dim::field};
}

}  // namespace maxaccel::london
