#include "maxaccel/accel_bounds.hpp"

#include <cmath>
#include <limits>

#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"

namespace maxaccel::accel {

ParticleSpec::ParticleSpec(Quantity mass, std::optional<Quantity> rest_energy)
    : mass_(mass) {
    require_same_dimension(mass.dimension(), dim::mass, "ParticleSpec mass");
    if (!(mass.value() > 0.0) || !std::isfinite(mass.value())) {
        throw DomainError("particle mass must be positive");
    }
    const Quantity c = constant("c");
    if (rest_energy) {
        require_same_dimension(rest_energy->dimension(), dim::energy, "ParticleSpec rest energy");
        rest_energy_ = *rest_energy;
    } else {
        rest_energy_ = mass * c * c;
    }
}

ParticleSpec ParticleSpec::electron() { return ParticleSpec(constant("m_e")); }

ParticleSpec ParticleSpec::proton() { return ParticleSpec(constant("m_p")); }

Quantity maximal_acceleration(const ParticleSpec& particle) {
    const Quantity c = constant("c");
    return 2.0 * particle.mass() * c * c * c / constant("hbar");
}

Quantity rate_bound(const Quantity& energy_spread, const Quantity& velocity_spread) {
    require_same_dimension(energy_spread.dimension(), dim::energy, "rate_bound energy spread");
    require_same_dimension(velocity_spread.dimension(), dim::velocity,
                           "rate_bound velocity spread");
    if (!(energy_spread.value() >= 0.0)) throw DomainError("energy spread must be >= 0");
    if (!(velocity_spread.value() >= 0.0)) throw DomainError("velocity spread must be >= 0");
    if (velocity_spread > constant("c")) {
        throw DomainError("causality violation: velocity spread exceeds c");
    }
    return 2.0 * energy_spread * velocity_spread / constant("hbar");
}

Quantity avg_acceleration_bound(const Quantity& mean_energy) {
    require_same_dimension(mean_energy.dimension(), dim::energy, "avg_acceleration_bound");
    if (!(mean_energy.value() >= 0.0)) throw DomainError("mean energy must be >= 0");
    return 2.0 * constant("c") * mean_energy / constant("hbar");
}

FluctuationEstimate fluctuation_expansion(const Quantity& acceleration, const Quantity& jerk,
                                          const Quantity& dt) {
    require_same_dimension(acceleration.dimension(), dim::acceleration, "fluctuation a0");
    require_same_dimension(jerk.dimension(), dim::jerk, "fluctuation jerk0");
    require_same_dimension(dt.dimension(), dim::time, "fluctuation dt");
    if (!(dt.value() >= 0.0)) throw DomainError("dt must be >= 0");

    const Quantity first = acceleration * dt;
    const Quantity second = jerk * dt * dt;
    FluctuationEstimate est{first + second};
    const double a = std::fabs(first.value());
    const double b = std::fabs(second.value());
    if (a > 0.0) {
        est.second_to_first = b / a;
    } else {
        est.second_to_first = b > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    est.second_order_significant = est.second_to_first > 0.1;
    return est;
}

FourAcceleration FourAcceleration::rest_frame(const std::array<double, 3>& acceleration_cm_s2) {
    const double c2 = constants().c * constants().c;
    return {{0.0, acceleration_cm_s2[0] / c2, acceleration_cm_s2[1] / c2,
             acceleration_cm_s2[2] / c2}};
}

LorentzTransform LorentzTransform::identity() {
    LorentzTransform t;
    for (int i = 0; i < 4; ++i) t.m_[i][i] = 1.0;
    return t;
}

namespace {

std::array<double, 3> unit(const std::array<double, 3>& v) {
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (!(len > 0.0)) throw DomainError("direction vector must be nonzero");
    return {v[0] / len, v[1] / len, v[2] / len};
}

}  // namespace

LorentzTransform LorentzTransform::boost(const std::array<double, 3>& direction,
                                         double rapidity) {
    const auto n = unit(direction);
    const double gamma = std::cosh(rapidity);
    const double gamma_beta = std::sinh(rapidity);
    LorentzTransform t;
    t.m_[0][0] = gamma;
    for (int i = 0; i < 3; ++i) {
        t.m_[0][i + 1] = -gamma_beta * n[i];
        t.m_[i + 1][0] = -gamma_beta * n[i];
        for (int j = 0; j < 3; ++j) {
            t.m_[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (gamma - 1.0) * n[i] * n[j];
        }
    }
    return t;
}

LorentzTransform LorentzTransform::rotation(const std::array<double, 3>& axis, double angle) {
    const auto k = unit(axis);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // Rodrigues: R = c I + s [k]_x + (1 - c) k k^T
    const double cross[3][3] = {{0, -k[2], k[1]}, {k[2], 0, -k[0]}, {-k[1], k[0], 0}};
    LorentzTransform t;
    t.m_[0][0] = 1.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t.m_[i + 1][j + 1] = (i == j ? c : 0.0) + s * cross[i][j] + (1.0 - c) * k[i] * k[j];
        }
    }
    return t;
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const {
    LorentzTransform out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 4; ++k) sum += m_[i][k] * rhs.m_[k][j];
            out.m_[i][j] = sum;
        }
    }
    return out;
}

FourAcceleration LorentzTransform::operator()(const FourAcceleration& a) const {
    FourAcceleration out;
    for (int i = 0; i < 4; ++i) {
        double sum = 0.0;
        for (int k = 0; k < 4; ++k) sum += m_[i][k] * a.components[k];
        out.components[i] = sum;
    }
    return out;
}

Quantity proper_acceleration_norm(const FourAcceleration& a) {
    const auto& x = a.components;
    const double contraction = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    return {std::sqrt(std::fabs(contraction)), dim::inverse_length};
}

BoundReport proper_acceleration_check(const FourAcceleration& a, const ParticleSpec& particle) {
    const Quantity c = constant("c");
    return make_report("|d2x/ds2| <= A_m / c^2", proper_acceleration_norm(a), Relation::LessEqual,
                       maximal_acceleration(particle) / (c * c));
}

}  // namespace maxaccel::accel
