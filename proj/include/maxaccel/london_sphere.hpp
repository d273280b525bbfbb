#pragma once

// London-theory solution for a superconducting sphere of radius R in a
// uniform applied field B0 along the polar axis, valid for r <= R.
//
// With x = beta r and X = beta R:
//
//   j_phi = (c / 4 pi) (3 B0 / 2) beta X * g(x) / (x^2 sinh X) * sin(theta)
//   B_r   = -3 B0 X * g(x) / (x^3 sinh X) * cos(theta)
//   B_th  = -(3 B0 / 2) X * [sinh x / (x sinh X) + g(x) / (x^3 sinh X)] * sin(theta)
//
// where g(x) = sinh x - x cosh x, and B = -(4 pi / (beta^2 c)) curl j.
// Every hyperbolic function enters through a ratio to sinh X, evaluated as
// exp(x - X) times bounded factors, so the solution stays finite for any
// beta R. For x < 1 the ratios g/x^3 and sinh x / x come from their Taylor
// series, which also covers the origin.
//
// Sign convention: e is the carrier charge magnitude and j = n e v, so the
// solution obeys curl v = -(e / m c) B and screens the applied field
// (j_phi < 0 for B0 > 0).

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "maxaccel/bound_report.hpp"
#include "maxaccel/materials.hpp"

namespace maxaccel::london {

class SphereProblem {
  public:
    /// Throws DomainError unless R > 0 and B0 >= 0.
    SphereProblem(Quantity radius, Quantity applied_field, Material material);

    const Quantity& radius() const { return radius_; }
    const Quantity& applied_field() const { return applied_field_; }
    const Material& material() const { return material_; }

  private:
    Quantity radius_;
    Quantity applied_field_;
    Material material_;
};

/// Solved fields at one interior point, CGS.
struct FieldSample {
    double r = 0.0;        // cm
    double theta = 0.0;    // rad
    double B_r = 0.0;      // G
    double B_theta = 0.0;  // G
    double j_phi = 0.0;    // statA / cm^2
    double v_phi = 0.0;    // cm/s
};

/// Evaluator for one SphereProblem. Cheap to copy, immutable.
class SphereField {
  public:
    explicit SphereField(const SphereProblem& problem);

    /// Throws DomainError for r outside [0, R] or theta outside [0, pi].
    FieldSample at(double r, double theta) const;

    double v_phi(double r, double theta) const;
    /// d v_phi / d r, from the closed form.
    double dv_phi_dr(double r, double theta) const;

    double radius() const { return radius_; }
    double applied_field() const { return b0_; }
    double beta() const { return beta_; }
    double beta_radius() const { return beta_ * radius_; }
    /// e / (m c) of the carrier, s^-1 G^-1.
    double charge_over_mc() const { return e_over_mc_; }

  private:
    struct Profile {
        double s1;  // g(x) / (x^3 sinh X)
        double s2;  // sinh x / (x sinh X)
    };
    Profile profile(double r) const;
    void check_domain(double r, double theta) const;

    double radius_;
    double b0_;
    double beta_;
    double current_scale_;  // (c / 4 pi)(3 B0 / 2) beta X
    double inv_ne_;         // 1 / (n e)
    double e_over_mc_;
};

FieldSample solve_fields(const SphereProblem& problem, double r, double theta);

/// Tensor grid r_i = R i / (nr - 1), theta_k = pi k / (ntheta - 1), row-major
/// in r. Origin and axis are included. Throws DomainError for nr or ntheta < 2.
std::vector<FieldSample> field_map(const SphereProblem& problem, std::size_t nr,
                                   std::size_t ntheta);

/// Column order: r_cm,theta_rad,Br_G,Btheta_G,jphi_cgs,vphi_cm_s. Values are
/// written with 17 significant digits, so read_field_csv restores them exactly.
void write_field_csv(std::ostream& out, std::span<const FieldSample> samples);
std::vector<FieldSample> read_field_csv(std::istream& in);

// ---------------------------------------------------------------------------
// London-equation residual
// ---------------------------------------------------------------------------

/// Components of an axisymmetric vector field in the (r, theta, phi) basis.
struct SphericalVector {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};
using AxisymmetricField = std::function<SphericalVector(double r, double theta)>;

/// Interior grid r_i = R (i+1)/(nr+1), theta_k = pi (k+1)/(ntheta+1), with
/// second-order central differences of step rel_step * min(R, 1/beta) in r
/// and rel_step in theta. Points with sin(theta) <= 1e-3 are skipped.
struct CurlGrid {
    std::size_t nr = 50;
    std::size_t ntheta = 50;
    double rel_step = 1e-3;
};

/// max |curl v + (e/mc) B| / max(|curl v|, |(e/mc) B|) over the grid, with
/// 0/0 taken as 0. `length_scale` sets the radial stencil (see CurlGrid).
double london_curl_residual(const AxisymmetricField& velocity, const AxisymmetricField& field,
                            double e_over_mc, double radius, double length_scale,
                            const CurlGrid& grid);

/// Residual of curl v = -(e/mc) B for the solved sphere, reported against
/// `tolerance`. Throws DomainError for a degenerate grid.
BoundReport london_curl_check(const SphereProblem& problem, const CurlGrid& grid = {},
                              double tolerance = 1e-5);

// ---------------------------------------------------------------------------
// Fermi-gas statistics and the acceleration of the superelectrons
// ---------------------------------------------------------------------------

struct FermiStats {
    Quantity temperature;
    Quantity chemical_potential;  // eps_F - (pi k T)^2 / (12 eps_F)
    Quantity energy_spread;       // (3/5) mu
    Quantity velocity_spread;     // (3/2) (mu / 2m)^(1/2)
    bool normal_state = false;    // T > T_c
};

/// Throws DomainError for T < 0 or a nonpositive chemical potential.
FermiStats fermi_stats(const Material& material, const Quantity& temperature);

struct ConvectiveAcceleration {
    /// |(v . grad) v| = v_phi^2 / (r sin theta), exact for the azimuthal flow.
    Quantity magnitude;
    /// |1/2 grad v^2|, from the closed-form radial derivative.
    Quantity gradient_term;
    /// |1/2 grad v^2 - v x curl v| with every derivative taken by
    /// fourth-order finite differences of v_phi.
    Quantity identity_form;
    /// The same magnitude with curl v replaced by -(e/mc) B and expanded
    /// with the Levi-Civita symbol.
    Quantity levi_civita_form;
    /// magnitude <= (2/hbar) dE dv
    BoundReport bound;
};

ConvectiveAcceleration convective_acceleration(const SphereField& field, double r, double theta,
                                               const Quantity& energy_spread,
                                               const Quantity& velocity_spread);
ConvectiveAcceleration convective_acceleration(const SphereField& field, double r, double theta,
                                               const FermiStats& stats);

/// Convective acceleration against the rate bound at every point of
/// field_map(problem, nr, ntheta).
struct ConsistencyScan {
    std::size_t points = 0;
    std::size_t violations = 0;
    double max_ratio = 0.0;  // largest magnitude / bound
};

ConsistencyScan ma_consistency_scan(const SphereProblem& problem, const FermiStats& stats,
                                    std::size_t nr, std::size_t ntheta);

/// sqrt(1/4 |grad v^2|^2 + (e/mc) eps_ijk d_i(v^2) v_j B_k
///      + (e/mc)^2 (v^2 B^2 - (v . B)^2)),
/// components in any right-handed orthonormal basis. A radicand that rounds
/// below zero is clamped to zero.
double levi_civita_acceleration(const SphericalVector& grad_v2, const SphericalVector& v,
                                const SphericalVector& b, double e_over_mc);

}  // namespace maxaccel::london
