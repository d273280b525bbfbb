#pragma once

// Upper limits on the radial electric field inside the superconductor that
// follow from the rate bound, and the London-theory value they are compared to.
//
// The canonical formulas are dimensionally consistent:
//
//   general     |E_r| <= |v B_th| / c + sqrt((dE dv / (mu_B c))^2 - (v B_r / c)^2)
//   statistical the general form at the Fermi-gas dE, dv with v -> dv
//   equator     |E_r| <= (v0 / c) (|B_th| + m v0^2 / (2 mu_B))
//
// The `verbatim` functions evaluate the formulas exactly as typeset (without
// the 1/c in the general form's square root, without m in the equator form,
// and with the statistical prefactor (3 / 2m)(eps_F / 2)^(1/2)). Their
// terms do not share a dimension, so they return bare CGS magnitudes for
// comparison only.

#include "maxaccel/bound_report.hpp"
#include "maxaccel/london_sphere.hpp"
#include "maxaccel/materials.hpp"

namespace maxaccel::london {

/// Mass and Bohr magneton of the charge carrier.
struct Carrier {
    Quantity mass;
    Quantity bohr_magneton;

    static Carrier electron();
    static Carrier of(const Material& material);
};

/// dE >= mu_B B_r, reported as mu_B |B_r| <= dE.
BoundReport reality_condition(const Quantity& energy_spread, const Quantity& radial_field,
                              const Carrier& carrier = Carrier::electron());

/// B_r* = dE / mu_B, the largest radial field with a real bound.
Quantity reality_threshold(const Quantity& energy_spread,
                           const Carrier& carrier = Carrier::electron());

/// Throws DomainError when the square root's argument is negative beyond
/// rounding (the reality condition fails).
Quantity er_bound_general(const Quantity& v_phi, const Quantity& radial_field,
                          const Quantity& polar_field, const Quantity& energy_spread,
                          const Quantity& velocity_spread,
                          const Carrier& carrier = Carrier::electron());
double er_bound_general_verbatim(double v_phi, double radial_field, double polar_field,
                                 double energy_spread, double velocity_spread,
                                 const Carrier& carrier = Carrier::electron());

/// General bound evaluated at fermi_stats(material, T).
Quantity er_bound_statistical(const Material& material, const Quantity& temperature,
                              const Quantity& radial_field, const Quantity& polar_field);
double er_bound_statistical_verbatim(const Material& material, double radial_field,
                                     double polar_field);

/// Equator (B_r = 0) with dE = m v0^2 / 2 and dv = v0.
Quantity er_bound_equator(const Quantity& v0, const Quantity& polar_field,
                          const Carrier& carrier = Carrier::electron());
double er_bound_equator_verbatim(double v0, double polar_field,
                                 const Carrier& carrier = Carrier::electron());

/// |B_th| for which er_bound_equator(v0, B_th) equals `bound`. Throws
/// DomainError when `bound` is below the field-free value.
Quantity infer_equator_polar_field(const Quantity& v0, const Quantity& bound,
                                   const Carrier& carrier = Carrier::electron());

/// v0 = (e / m c) lambda B: surface speed of the exponential boundary layer
/// carrying a surface field B.
Quantity surface_velocity(const Material& material, const Quantity& penetration_depth,
                          const Quantity& surface_field);

/// (m / 2e) d(v_phi^2)/dr at the surface of an exponential boundary layer,
/// which is (m / e) v0^2 / lambda.
Quantity er_london(const Material& material, const Quantity& v0,
                   const Quantity& penetration_depth);

/// (m / 2e) d(v_phi^2)/dr at (R, pi/2) of the full sphere solution, by a
/// one-sided finite difference.
Quantity er_london_profile(const SphereField& field, const Material& material);

}  // namespace maxaccel::london
