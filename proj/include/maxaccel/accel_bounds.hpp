#pragma once

// Maximal acceleration and the kinematic bounds that lead to it.

#include <array>
#include <optional>

#include "maxaccel/bound_report.hpp"
#include "maxaccel/units.hpp"

namespace maxaccel::accel {

/// A massive particle. The rest energy defaults to m c^2.
class ParticleSpec {
  public:
    /// Throws DomainError unless mass > 0.
    explicit ParticleSpec(Quantity mass, std::optional<Quantity> rest_energy = std::nullopt);

    static ParticleSpec electron();
    static ParticleSpec proton();

    const Quantity& mass() const { return mass_; }
    const Quantity& rest_energy() const { return rest_energy_; }

  private:
    Quantity mass_;
    Quantity rest_energy_;
};

/// A_m = 2 m c^3 / hbar.
Quantity maximal_acceleration(const ParticleSpec& particle);

/// |dv/dt| <= (2/hbar) dE dv. Throws DomainError for dE < 0, dv < 0 or
/// dv > c (causality: dv <= v_max <= c).
Quantity rate_bound(const Quantity& energy_spread, const Quantity& velocity_spread);

/// <a> <= 2 c E / hbar. Throws DomainError for E < 0.
Quantity avg_acceleration_bound(const Quantity& mean_energy);

struct FluctuationEstimate {
    Quantity velocity_spread;     // a0 dt + jerk0 dt^2
    double second_to_first = 0.0;  // |jerk0 dt^2| / |a0 dt|, inf if the first term is 0
    /// True when the quadratic term exceeds 10% of the linear one, i.e. dt
    /// is not small enough for dv ~ <a> dt.
    bool second_order_significant = false;
};

FluctuationEstimate fluctuation_expansion(const Quantity& acceleration, const Quantity& jerk,
                                          const Quantity& dt);

/// d^2 x^mu / ds^2 with s = c tau, components in cm^-1, index 0 is time.
struct FourAcceleration {
    std::array<double, 4> components{};

    /// Rest-frame four-acceleration for a spatial acceleration in cm/s^2:
    /// (0, a / c^2).
    static FourAcceleration rest_frame(const std::array<double, 3>& acceleration_cm_s2);
};

/// Proper Lorentz transformation acting on contravariant four-vectors.
class LorentzTransform {
  public:
    static LorentzTransform identity();
    /// Pure boost along `direction` (normalized internally) with rapidity eta.
    static LorentzTransform boost(const std::array<double, 3>& direction, double rapidity);
    /// Spatial rotation about `axis` by `angle` radians.
    static LorentzTransform rotation(const std::array<double, 3>& axis, double angle);

    LorentzTransform operator*(const LorentzTransform& rhs) const;
    FourAcceleration operator()(const FourAcceleration& a) const;

  private:
    std::array<std::array<double, 4>, 4> m_{};
};

/// (|a^mu a_mu|)^(1/2), metric (+,-,-,-). In cm^-1.
Quantity proper_acceleration_norm(const FourAcceleration& a);

/// proper_acceleration_norm(a) <= A_m / c^2.
BoundReport proper_acceleration_check(const FourAcceleration& a, const ParticleSpec& particle);

}  // namespace maxaccel::accel
