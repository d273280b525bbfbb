#pragma once

// Orthogonality times and the Heisenberg / Margolus-Levitin lower bounds.
//
// Phase convention: a level of energy E_n evolves as exp(-i E_n pi t / hbar).
// With this convention the bounds read t >= hbar/(2 dE) and t >= hbar/(2 E).
// Times in the usual Schroedinger convention, exp(-i E_n t / hbar), are
// t_standard = pi * t.
//
// All energies are in erg and all times in seconds.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "maxaccel/bound_report.hpp"
#include "maxaccel/errors.hpp"

namespace maxaccel::speed_limit {

struct EnergyLevel {
    double energy;  // erg
    double weight;  // |c_n|^2
};

/// Discrete spectrum with probability weights. Relative phases of the
/// amplitudes are not stored: the overlap depends on |c_n|^2 only.
///
/// Invariants: energies >= 0, weights >= 0 summing to 1 within 1e-12, levels
/// sorted ascending with duplicate energies merged.
class QuantumState {
  public:
    /// Validates; throws DomainError on negative energies, negative or
    /// non-normalized weights, or an empty list.
    explicit QuantumState(std::vector<EnergyLevel> levels);

    /// Rescales weights to unit sum before validating.
    static QuantumState normalized(std::vector<EnergyLevel> levels);

    /// Subtracts the lowest energy from every level, so negative spectra are
    /// accepted. The Margolus-Levitin bound is ground-state referenced.
    static QuantumState shift_to_ground(std::vector<EnergyLevel> levels);

    std::span<const EnergyLevel> levels() const { return levels_; }
    std::size_t size() const { return levels_.size(); }
    double max_energy() const { return levels_.back().energy; }

  private:
    std::vector<EnergyLevel> levels_;
};

/// Value of <psi(0)|psi(t)>.
struct Overlap {
    double re = 1.0;
    double im = 0.0;
    double norm() const;
};

Overlap overlap(const QuantumState& state, double t);

struct EnergyMoments {
    double mean;    // E
    double spread;  // dE
};

EnergyMoments mean_and_spread(const QuantumState& state);

/// Lower bounds on the orthogonality time. std::nullopt marks an unbounded
/// time (dE = 0 for Heisenberg, E = 0 for Margolus-Levitin).
struct SpeedLimitBounds {
    std::optional<double> heisenberg;        // hbar / (2 dE)
    std::optional<double> margolus_levitin;  // hbar / (2 E)

    /// Largest finite bound, or nullopt if both are unbounded.
    std::optional<double> tightest() const;
};

SpeedLimitBounds bounds(const QuantumState& state);

struct FoundZero {
    double time;      // s
    double residual;  // |S(time)|
};
struct InfimumOnly {
    double time_at_min;  // s
    double min_abs;      // smallest |S| seen in the window
};
struct NeverOrthogonal {};

struct OrthogonalityResult {
    std::variant<FoundZero, InfimumOnly, NeverOrthogonal> kind;
    SpeedLimitBounds bounds;
    double mean_energy;
    double energy_spread;
    std::size_t samples = 0;  // grid points scanned

    bool found() const { return std::holds_alternative<FoundZero>(kind); }
};

struct SearchOptions {
    double abs_tol = 1e-9;
    /// Upper limit on grid points; larger windows are a sizing error.
    std::size_t max_samples = 50'000'000;
    /// Lower limit on grid points, so slow spectra are still sampled finely.
    std::size_t min_samples = 256;
};

/// Thrown when the window needs more grid points than allowed.
class SizingError : public DomainError {
  public:
    SizingError(const std::string& what, double suggested_window)
        : DomainError(what), suggested_window_(suggested_window) {}
    double suggested_window() const { return suggested_window_; }

  private:
    double suggested_window_;
};

/// Smallest t in (0, window] with |S(t)| <= abs_tol.
///
/// |S(t)| is scanned on a uniform grid with step <= hbar / (10 pi E_max).
/// Grid intervals that could dip below abs_tol (given the Lipschitz bound
/// |dS/dt| <= pi E / hbar) are subdivided left to right and the first
/// candidate is refined by golden-section search to 1e-12 relative in t.
/// Without a zero, the refined global minimum is returned as InfimumOnly.
/// Single-level states are NeverOrthogonal.
OrthogonalityResult first_orthogonality_time(const QuantumState& state, double window,
                                             const SearchOptions& options = {});

/// Term-by-term sum of cos x >= 1 - (2/pi)(x + sin x) over the spectrum:
///   Re S(t) - (2/pi) Im S(t) >= 1 - 2 E t / hbar.
/// At a zero of S this gives t >= hbar / (2E). Rounding slack 1e-12.
BoundReport ml_certificate(const QuantumState& state, double t);

/// cos x >= 1 - (2/pi)(x + sin x), evaluated exactly as written (x >= 0).
bool cosine_inequality_holds(double x);

}  // namespace maxaccel::speed_limit
