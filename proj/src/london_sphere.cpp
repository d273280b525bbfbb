#include "maxaccel/london_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "maxaccel/accel_bounds.hpp"
#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"
#include "stencil.hpp"

namespace maxaccel::london {

namespace {

constexpr double kPi = std::numbers::pi;

// g(x) / x^3 = -sum_{k>=1} 2k x^(2k-2) / (2k+1)!
double g_over_x3_series(double x) {
    const double x2 = x * x;
    double term = 1.0 / 6.0;  // x^(2k-2) / (2k+1)! at k = 1
    double sum = 0.0;
    for (int k = 1; k < 30; ++k) {
        const double contrib = 2.0 * k * term;
        sum += contrib;
        if (contrib < 1e-18 * sum) break;
        term *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return -sum;
}

// sinh(x) / x = sum_{k>=0} x^(2k) / (2k+1)!
double sinhc_series(double x) {
    const double x2 = x * x;
    double term = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 30; ++k) {
        sum += term;
        if (term < 1e-18 * sum) break;
        term *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return sum;
}

}  // namespace

SphereProblem::SphereProblem(Quantity radius, Quantity applied_field, Material material)
    : radius_(radius), applied_field_(applied_field), material_(std::move(material)) {
    require_same_dimension(radius.dimension(), dim::length, "sphere radius");
    require_same_dimension(applied_field.dimension(), dim::field, "applied field");
    if (!(radius.value() > 0.0) || !std::isfinite(radius.value())) {
        throw DomainError("sphere radius must be positive");
    }
    if (!(applied_field.value() >= 0.0) || !std::isfinite(applied_field.value())) {
        throw DomainError("applied field must be >= 0");
    }
    material_.validate();
}

SphereField::SphereField(const SphereProblem& problem)
    : radius_(problem.radius().value()),
      b0_(problem.applied_field().value()),
      beta_(london::beta(problem.material()).in(dim::inverse_length)) {
    const auto& k = constants();
    const auto& mat = problem.material();
    const double e = mat.charge.in(dim::charge);
    const double m = mat.mass.in(dim::mass);
    const double n = mat.density.in(dim::number_density);
    current_scale_ = (k.c / (4.0 * kPi)) * 1.5 * b0_ * beta_ * beta_radius();
    inv_ne_ = 1.0 / (n * e);
    e_over_mc_ = e / (m * k.c);
}

SphereField::Profile SphereField::profile(double r) const {
    const double x = beta_ * r;
    const double big_x = beta_radius();
    if (x < 1.0) {
        const double inv_sinh =
            big_x < 1.0 ? 1.0 / std::sinh(big_x) : 2.0 * std::exp(-big_x) / -std::expm1(-2.0 * big_x);
        return {g_over_x3_series(x) * inv_sinh, sinhc_series(x) * inv_sinh};
    }
    // Here 1 <= x <= X: sinh(x)/sinh(X) = e^(x-X) (1 - e^-2x) / (1 - e^-2X).
    const double scale = std::exp(x - big_x) / -std::expm1(-2.0 * big_x);
    const double e2x = std::exp(-2.0 * x);
    const double g_ratio = scale * ((1.0 - x) - e2x * (1.0 + x));
    const double sinh_ratio = scale * -std::expm1(-2.0 * x);
    return {g_ratio / (x * x * x), sinh_ratio / x};
}

void SphereField::check_domain(double r, double theta) const {
    if (!(r >= 0.0 && r <= radius_)) {
        std::ostringstream msg;
        msg << "r = " << r << " cm is outside [0, R = " << radius_
            << " cm]; the exterior solution is not implemented";
        throw DomainError(msg.str());
    }
    if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("theta must lie in [0, pi]");
}

FieldSample SphereField::at(double r, double theta) const {
    check_domain(r, theta);
    const auto [s1, s2] = profile(r);
    const double big_x = beta_radius();
    const double sin_t = std::sin(theta);
    const double cos_t = std::cos(theta);
    FieldSample s;
    s.r = r;
    s.theta = theta;
    s.B_r = -3.0 * b0_ * big_x * s1 * cos_t;
    s.B_theta = -1.5 * b0_ * big_x * (s1 + s2) * sin_t;
    s.j_phi = current_scale_ * (beta_ * r) * s1 * sin_t;
    s.v_phi = s.j_phi * inv_ne_;
    return s;
}

double SphereField::v_phi(double r, double theta) const { return at(r, theta).v_phi; }

double SphereField::dv_phi_dr(double r, double theta) const {
    check_domain(r, theta);
    const auto [s1, s2] = profile(r);
    // d/dx [g(x) / x^2] = -sinh x / x - 2 g(x) / x^2
    return current_scale_ * beta_ * (-s2 - 2.0 * s1) * std::sin(theta) * inv_ne_;
}

FieldSample solve_fields(const SphereProblem& problem, double r, double theta) {
    return SphereField(problem).at(r, theta);
}

std::vector<FieldSample> field_map(const SphereProblem& problem, std::size_t nr,
                                   std::size_t ntheta) {
    if (nr < 2 || ntheta < 2) throw DomainError("field map needs at least 2x2 points");
    const SphereField field(problem);
    std::vector<FieldSample> out;
    out.reserve(nr * ntheta);
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = i + 1 == nr ? field.radius()
                                     : field.radius() * static_cast<double>(i) / (nr - 1);
        for (std::size_t k = 0; k < ntheta; ++k) {
            const double theta = k + 1 == ntheta ? kPi : kPi * static_cast<double>(k) / (ntheta - 1);
            out.push_back(field.at(r, theta));
        }
    }
    return out;
}

namespace {
constexpr const char* kCsvHeader = "r_cm,theta_rad,Br_G,Btheta_G,jphi_cgs,vphi_cm_s";
}

void write_field_csv(std::ostream& out, std::span<const FieldSample> samples) {
    out << kCsvHeader << '\n';
    char buf[160];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.r, s.theta,
                      s.B_r, s.B_theta, s.j_phi, s.v_phi);
        out << buf;
    }
}

std::vector<FieldSample> read_field_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw ParseError(std::string("field CSV must start with the header ") + kCsvHeader);
    }
    std::vector<FieldSample> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        FieldSample s;
        double* fields[] = {&s.r, &s.theta, &s.B_r, &s.B_theta, &s.j_phi, &s.v_phi};
        std::istringstream row(line);
        std::string cell;
        std::size_t count = 0;
        while (std::getline(row, cell, ',')) {
            if (count == 6) break;
            try {
                std::size_t used = 0;
                *fields[count] = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ParseError("field CSV line " + std::to_string(line_no) + ": bad number '" +
                                 cell + "'");
            }
            ++count;
        }
        if (count != 6 || row.rdbuf()->in_avail() > 0) {
            throw ParseError("field CSV line " + std::to_string(line_no) + ": expected 6 columns");
        }
        out.push_back(s);
    }
    return out;
}

double london_curl_residual(const AxisymmetricField& velocity, const AxisymmetricField& field,
                            double e_over_mc, double radius, double length_scale,
                            const CurlGrid& grid) {
    if (grid.nr == 0 || grid.ntheta == 0 || !(grid.rel_step > 0.0 && grid.rel_step <= 0.1)) {
        throw DomainError("degenerate curl grid: need nr, ntheta >= 1 and rel_step in (0, 0.1]");
    }
    double max_residual = 0.0;
    double max_scale = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < grid.nr; ++i) {
        const double r = radius * static_cast<double>(i + 1) / (grid.nr + 1);
        const double hr = std::min({grid.rel_step * length_scale, 0.5 * r, 0.5 * (radius - r)});
        for (std::size_t k = 0; k < grid.ntheta; ++k) {
            const double theta = kPi * static_cast<double>(k + 1) / (grid.ntheta + 1);
            const double sin_t = std::sin(theta);
            if (sin_t <= 1e-3) continue;
            const double ht = std::min({grid.rel_step, 0.5 * theta, 0.5 * (kPi - theta)});
            ++used;

            auto at_r = [&](double rr) { return velocity(rr, theta); };
            auto at_t = [&](double tt) { return velocity(r, tt); };
            const double d_sin_vphi = detail::central2(
                [&](double tt) { return std::sin(tt) * at_t(tt).phi; }, theta, ht);
            const double d_r_vphi =
                detail::central2([&](double rr) { return rr * at_r(rr).phi; }, r, hr);
            const double d_r_vtheta =
                detail::central2([&](double rr) { return rr * at_r(rr).theta; }, r, hr);
            const double d_t_vr = detail::central2([&](double tt) { return at_t(tt).r; }, theta, ht);

            const SphericalVector curl{d_sin_vphi / (r * sin_t), -d_r_vphi / r,
                                       (d_r_vtheta - d_t_vr) / r};
            const SphericalVector b = field(r, theta);
            const SphericalVector rhs{-e_over_mc * b.r, -e_over_mc * b.theta, -e_over_mc * b.phi};

            const double res = std::hypot(curl.r - rhs.r, curl.theta - rhs.theta, curl.phi - rhs.phi);
            const double scale = std::max(std::hypot(curl.r, curl.theta, curl.phi),
                                          std::hypot(rhs.r, rhs.theta, rhs.phi));
            max_residual = std::max(max_residual, res);
            max_scale = std::max(max_scale, scale);
        }
    }
    if (used == 0) throw DomainError("degenerate curl grid: every point lies on the axis");
    return max_scale > 0.0 ? max_residual / max_scale : 0.0;
}

BoundReport london_curl_check(const SphereProblem& problem, const CurlGrid& grid,
                              double tolerance) {
    const SphereField sphere(problem);
    auto velocity = [&](double r, double theta) {
        return SphericalVector{0.0, 0.0, sphere.v_phi(r, theta)};
    };
    auto field = [&](double r, double theta) {
        const auto s = sphere.at(r, theta);
        return SphericalVector{s.B_r, s.B_theta, 0.0};
    };
    const double scale = std::min(sphere.radius(), 1.0 / sphere.beta());
    const double residual = london_curl_residual(velocity, field, sphere.charge_over_mc(),
                                                 sphere.radius(), scale, grid);
    return make_report("London curl residual |curl v + (e/mc) B| / scale",
                       Quantity::scalar(residual), Relation::LessEqual,
                       Quantity::scalar(tolerance));
}

FermiStats fermi_stats(const Material& material, const Quantity& temperature) {
    require_same_dimension(temperature.dimension(), dim::temperature, "fermi_stats temperature");
    if (!(temperature.value() >= 0.0)) throw DomainError("temperature must be >= 0");
    const Quantity kt = kPi * constant("k_B") * temperature;
    const Quantity& ef = material.fermi_energy;
    FermiStats s;
    s.temperature = temperature;
    s.chemical_potential = ef - kt * kt / (12.0 * ef);
    if (!(s.chemical_potential.value() > 0.0)) {
        throw DomainError("chemical potential is not positive; temperature far above degeneracy");
    }
    s.energy_spread = 0.6 * s.chemical_potential;
    s.velocity_spread = 1.5 * sqrt(s.chemical_potential / (2.0 * material.mass));
    s.normal_state = temperature > material.critical_temperature;
    return s;
}

double levi_civita_acceleration(const SphericalVector& grad_v2, const SphericalVector& v,
                                const SphericalVector& b, double e_over_mc) {
    const double g[3] = {grad_v2.r, grad_v2.theta, grad_v2.phi};
    const double u[3] = {v.r, v.theta, v.phi};
    const double f[3] = {b.r, b.theta, b.phi};
    auto epsilon = [](int i, int j, int k) {
        return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
    };
    double mixed = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) mixed += epsilon(i, j, k) * g[i] * u[j] * f[k];
    const double g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    const double u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    const double f2 = f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
    const double uf = u[0] * f[0] + u[1] * f[1] + u[2] * f[2];
    const double radicand =
        0.25 * g2 + e_over_mc * mixed + e_over_mc * e_over_mc * (u2 * f2 - uf * uf);
    return std::sqrt(std::max(radicand, 0.0));
}

ConvectiveAcceleration convective_acceleration(const SphereField& field, double r, double theta,
                                               const Quantity& energy_spread,
                                               const Quantity& velocity_spread) {
    const FieldSample s = field.at(r, theta);
    const double sin_t = std::sin(theta);
    const double v = s.v_phi;

    double magnitude = 0.0;
    double gradient = 0.0;
    double identity = 0.0;
    double levi = 0.0;
    if (r > 0.0 && sin_t > 0.0) {
        magnitude = v * v / (r * sin_t);

        // v_phi = V(r) sin(theta), so d(v_phi)/d(theta) = V cos(theta).
        const double dv_dr = field.dv_phi_dr(r, theta);
        const double dv_dtheta = field.v_phi(r, kPi / 2) * std::cos(theta);
        const SphericalVector grad_v2{2.0 * v * dv_dr, 2.0 * v * dv_dtheta / r, 0.0};
        gradient = 0.5 * std::hypot(grad_v2.r, grad_v2.theta);
        levi = levi_civita_acceleration(grad_v2, {0.0, 0.0, v}, {s.B_r, s.B_theta, 0.0},
                                        field.charge_over_mc());

        const double hr = 1e-3 * std::min(r, 1.0 / field.beta());
        const double ht = 1e-3 * std::min({1.0, theta, kPi - theta});
        const double R = field.radius();
        auto d_r = [&](auto&& f) { return detail::derivative4(f, r, hr, 0.0, R); };
        auto d_t = [&](auto&& f) { return detail::derivative4(f, theta, ht, 0.0, kPi); };
        auto vp = [&](double rr, double tt) { return field.v_phi(rr, tt); };

        const double dr_v2 = d_r([&](double rr) { return vp(rr, theta) * vp(rr, theta); });
        const double dt_v2 = d_t([&](double tt) { return vp(r, tt) * vp(r, tt); });
        const double curl_r = d_t([&](double tt) { return std::sin(tt) * vp(r, tt); }) / (r * sin_t);
        const double curl_t = -d_r([&](double rr) { return rr * vp(rr, theta); }) / r;
        // 1/2 grad v^2 - v x curl v, with v x w = v_phi (w_r theta_hat - w_theta r_hat).
        identity = std::hypot(0.5 * dr_v2 + v * curl_t, 0.5 * dt_v2 / r - v * curl_r);
    }

    ConvectiveAcceleration out;
    out.magnitude = {magnitude, dim::acceleration};
    out.gradient_term = {gradient, dim::acceleration};
    out.identity_form = {identity, dim::acceleration};
    out.levi_civita_form = {levi, dim::acceleration};
    out.bound = make_report("|(v.grad)v| <= (2/hbar) dE dv", out.magnitude, Relation::LessEqual,
                            accel::rate_bound(energy_spread, velocity_spread));
    return out;
}

ConvectiveAcceleration convective_acceleration(const SphereField& field, double r, double theta,
                                               const FermiStats& stats) {
    return convective_acceleration(field, r, theta, stats.energy_spread, stats.velocity_spread);
}

}  // namespace maxaccel::london

namespace maxaccel::london {

ConsistencyScan ma_consistency_scan(const SphereProblem& problem, const FermiStats& stats,
                                    std::size_t nr, std::size_t ntheta) {
    const SphereField field(problem);
    ConsistencyScan scan;
    for (const FieldSample& s : field_map(problem, nr, ntheta)) {
        const ConvectiveAcceleration a = convective_acceleration(field, s.r, s.theta, stats);
        ++scan.points;
        if (!a.bound.satisfied) ++scan.violations;
        scan.max_ratio = std::max(scan.max_ratio, a.bound.lhs.value() / a.bound.rhs.value());
    }
    return scan;
}

}  // namespace maxaccel::london
