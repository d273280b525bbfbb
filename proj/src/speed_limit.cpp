#include "maxaccel/speed_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "maxaccel/constants.hpp"

namespace maxaccel::speed_limit {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kRefineRelTol = 1e-12;
constexpr double kCertificateSlack = 1e-12;
// Phase recurrence is re-seeded from exact sin/cos this often.
constexpr std::size_t kReseedInterval = 128;

double angular_rate(double energy) { return std::numbers::pi * energy / constants().hbar; }

struct Rotor {
    double omega;
    double weight;
    double re, im;    // current exp(-i omega t)
    double dre, dim;  // exp(-i omega h)
};

}  // namespace

QuantumState::QuantumState(std::vector<EnergyLevel> levels) {
    if (levels.empty()) throw DomainError("quantum state has no levels");
    double sum = 0.0;
    for (const auto& l : levels) {
        if (!std::isfinite(l.energy) || l.energy < 0.0) {
            std::ostringstream msg;
            msg << "energy " << l.energy
                << " erg is negative or not finite; shift the spectrum to its ground state";
            throw DomainError(msg.str());
        }
        if (!std::isfinite(l.weight) || l.weight < 0.0) {
            throw DomainError("level weights must be finite and nonnegative");
        }
        sum += l.weight;
    }
    if (std::fabs(sum - 1.0) > kWeightSumTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "weights sum to " << sum << ", expected 1 within " << kWeightSumTol;
        throw DomainError(msg.str());
    }

    std::sort(levels.begin(), levels.end(),
              [](const EnergyLevel& a, const EnergyLevel& b) { return a.energy < b.energy; });
    for (const auto& l : levels) {
        if (l.weight == 0.0) continue;
        if (!levels_.empty() && levels_.back().energy == l.energy) {
            levels_.back().weight += l.weight;
        } else {
            levels_.push_back(l);
        }
    }
}

QuantumState QuantumState::normalized(std::vector<EnergyLevel> levels) {
    double sum = 0.0;
    for (const auto& l : levels) sum += l.weight;
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw DomainError("cannot normalize: weights do not have a positive finite sum");
    }
    for (auto& l : levels) l.weight /= sum;
    return QuantumState(std::move(levels));
}

QuantumState QuantumState::shift_to_ground(std::vector<EnergyLevel> levels) {
    if (levels.empty()) throw DomainError("quantum state has no levels");
    const double ground =
        std::min_element(levels.begin(), levels.end(), [](const auto& a, const auto& b) {
            return a.energy < b.energy;
        })->energy;
    for (auto& l : levels) l.energy -= ground;
    return QuantumState(std::move(levels));
}

double Overlap::norm() const { return std::hypot(re, im); }

Overlap overlap(const QuantumState& state, double t) {
    if (!(t >= 0.0)) throw DomainError("overlap requires t >= 0");
    Overlap s{0.0, 0.0};
    for (const auto& l : state.levels()) {
        const double phase = angular_rate(l.energy) * t;
        s.re += l.weight * std::cos(phase);
        s.im -= l.weight * std::sin(phase);
    }
    return s;
}

EnergyMoments mean_and_spread(const QuantumState& state) {
    double mean = 0.0;
    for (const auto& l : state.levels()) mean += l.weight * l.energy;
    double var = 0.0;
    for (const auto& l : state.levels()) {
        const double d = l.energy - mean;
        var += l.weight * d * d;
    }
    return {mean, std::sqrt(var)};
}

std::optional<double> SpeedLimitBounds::tightest() const {
    if (heisenberg && margolus_levitin) return std::max(*heisenberg, *margolus_levitin);
    return heisenberg ? heisenberg : margolus_levitin;
}

SpeedLimitBounds bounds(const QuantumState& state) {
    const auto [mean, spread] = mean_and_spread(state);
    const double hbar = constants().hbar;
    SpeedLimitBounds b;
    if (spread > 0.0) b.heisenberg = hbar / (2.0 * spread);
    if (mean > 0.0) b.margolus_levitin = hbar / (2.0 * mean);
    return b;
}

namespace {

struct Minimum {
    double t;
    double value;
};

// Golden-section search for the minimum of |S| on [a, b].
Minimum refine_minimum(const QuantumState& state, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    auto f = [&](double t) { return overlap(state, t).norm(); };
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while ((b - a) > kRefineRelTol * b) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

// The first part with |S| <= tol can end short of the zero it borders.
// Widen the bracket around m by doubling until |S| rises on both sides,
// then refine again.
Minimum polish_minimum(const QuantumState& state, Minimum m, double width) {
    auto f = [&](double t) { return overlap(state, t).norm(); };
    double hi = m.t + width;
    for (int k = 0; k < 60 && f(hi) < m.value; ++k) hi = m.t + 2.0 * (hi - m.t);
    double lo = std::max(m.t - width, 0.0);
    for (int k = 0; k < 60 && lo > 0.0 && f(lo) < m.value; ++k) {
        lo = std::max(m.t - 2.0 * (m.t - lo), 0.0);
    }
    const Minimum p = refine_minimum(state, lo, hi);
    return p.value <= m.value ? p : m;
}

// Earliest t in [a, b] with |S(t)| <= tol. The interval is split into
// kSubdivisions parts and searched left to right, skipping parts the
// Lipschitz bound rules out; at kMaxDepth the surviving part is refined by
// golden section. Zeros closer together than (b - a) / kSubdivisions^kMaxDepth
// are not told apart.
std::optional<Minimum> earliest_zero(const QuantumState& state, double a, double b, double fa,
                                     double fb, double lipschitz, double tol, int depth) {
    constexpr int kSubdivisions = 64;
    constexpr int kMaxDepth = 3;
    if (depth == kMaxDepth) {
        const Minimum m = refine_minimum(state, a, b);
        if (m.value > tol) return std::nullopt;
        return polish_minimum(state, m, b - a);
    }
    const double w = (b - a) / kSubdivisions;
    double f0 = fa;
    for (int j = 0; j < kSubdivisions; ++j) {
        const double t0 = a + j * w;
        const double t1 = j + 1 == kSubdivisions ? b : a + (j + 1) * w;
        const double f1 = j + 1 == kSubdivisions ? fb : overlap(state, t1).norm();
        if (0.5 * (f0 + f1 - lipschitz * (t1 - t0)) <= tol) {
            if (auto z = earliest_zero(state, t0, t1, f0, f1, lipschitz, tol, depth + 1)) return z;
        }
        f0 = f1;
    }
    return std::nullopt;
}

}  // namespace

OrthogonalityResult first_orthogonality_time(const QuantumState& state, double window,
                                             const SearchOptions& options) {
    if (!(window > 0.0) || !std::isfinite(window)) {
        throw DomainError("empty scan window: window must be a positive finite time");
    }
    if (!(options.abs_tol > 0.0 && options.abs_tol <= 1e-3)) {
        throw DomainError("abs_tol must lie in (0, 1e-3]");
    }

    const auto moments = mean_and_spread(state);
    OrthogonalityResult result{NeverOrthogonal{}, bounds(state), moments.mean, moments.spread, 0};
    if (state.size() == 1) return result;

    const double hbar = constants().hbar;
    const double max_step = hbar / (10.0 * std::numbers::pi * state.max_energy());
    const double needed = std::ceil(window / max_step);
    if (!(needed <= static_cast<double>(options.max_samples))) {
        const double suggested = static_cast<double>(options.max_samples) * max_step;
        std::ostringstream msg;
        msg << "scan window " << window << " s needs " << needed << " grid points (limit "
            << options.max_samples << "); largest usable window is " << suggested << " s";
        throw SizingError(msg.str(), suggested);
    }
    const std::size_t n = std::max(static_cast<std::size_t>(needed), options.min_samples);
    const double h = window / static_cast<double>(n);
    result.samples = n + 1;

    std::vector<Rotor> rotors;
    rotors.reserve(state.size());
    for (const auto& l : state.levels()) {
        const double w = angular_rate(l.energy);
        rotors.push_back({w, l.weight, 1.0, 0.0, std::cos(w * h), -std::sin(w * h)});
    }
    auto advance = [&](std::size_t i) {
        const double t = static_cast<double>(i) * h;
        double re = 0.0, im = 0.0;
        const bool reseed = i % kReseedInterval == 0;
        for (auto& r : rotors) {
            if (reseed) {
                r.re = std::cos(r.omega * t);
                r.im = -std::sin(r.omega * t);
            } else {
                const double nre = r.re * r.dre - r.im * r.dim;
                r.im = r.re * r.dim + r.im * r.dre;
                r.re = nre;
            }
            re += r.weight * r.re;
            im += r.weight * r.im;
        }
        return std::hypot(re, im);
    };

    // |S| is Lipschitz with L = pi E / hbar, so an interval whose endpoint
    // values sum to more than 2 abs_tol + L w cannot contain a zero.
    const double lipschitz = angular_rate(moments.mean);
    double f_prev = advance(0);
    std::size_t best_index = 0;
    double best_value = f_prev;
    for (std::size_t i = 1; i <= n; ++i) {
        const double f = advance(i);
        if (f < best_value) {
            best_value = f;
            best_index = i;
        }
        const double t0 = static_cast<double>(i - 1) * h;
        const double t1 = i == n ? window : static_cast<double>(i) * h;
        if (0.5 * (f_prev + f - lipschitz * (t1 - t0)) <= options.abs_tol) {
            if (auto zero = earliest_zero(state, t0, t1, f_prev, f, lipschitz, options.abs_tol, 0)) {
                result.kind = FoundZero{zero->t, zero->value};
                return result;
            }
        }
        f_prev = f;
    }

    const double t_best = static_cast<double>(best_index) * h;
    const Minimum m =
        refine_minimum(state, std::max(t_best - h, 0.0), std::min(t_best + h, window));
    result.kind = m.value < best_value ? InfimumOnly{m.t, m.value} : InfimumOnly{t_best, best_value};
    return result;
}

BoundReport ml_certificate(const QuantumState& state, double t) {
    const Overlap s = overlap(state, t);
    const double energy = mean_and_spread(state).mean;
    const double lhs = s.re - (2.0 / std::numbers::pi) * s.im;
    const double rhs = 1.0 - 2.0 * energy * t / constants().hbar;
    return make_report("Re S - (2/pi) Im S >= 1 - 2Et/hbar", Quantity::scalar(lhs),
                       Relation::GreaterEqual, Quantity::scalar(rhs), kCertificateSlack);
}

bool cosine_inequality_holds(double x) {
    return std::cos(x) >= 1.0 - (2.0 / std::numbers::pi) * (x + std::sin(x));
}

}  // namespace maxaccel::speed_limit
