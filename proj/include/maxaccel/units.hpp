#pragma once

// Dimensional bookkeeping in Gaussian-CGS.
//
// Base dimensions are mass (g), length (cm), time (s) and temperature (K).
// Charge is not a base dimension: the esu is g^1/2 cm^3/2 s^-1, so exponents
// are exact rationals. In this system E (statvolt/cm) and B (gauss) share one
// dimension, g^1/2 cm^-1/2 s^-1.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maxaccel {

/// Exact rational number with a normalized sign (denominator > 0).
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int32_t num, std::int32_t den = 1);  // NOLINT(google-explicit-constructor)

    constexpr std::int32_t num() const { return num_; }
    constexpr std::int32_t den() const { return den_; }
    constexpr bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / den_; }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(Rational a) { return {-a.num_, a.den_}; }
    friend constexpr Rational operator-(Rational a, Rational b) { return a + (-b); }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend constexpr bool operator==(Rational, Rational) = default;

    std::string to_string() const;

  private:
    std::int32_t num_ = 0;
    std::int32_t den_ = 1;
};

constexpr Rational::Rational(std::int32_t num, std::int32_t den) : num_(num), den_(den) {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int32_t a = num_ < 0 ? -num_ : num_;
    std::int32_t b = den_;
    while (b != 0) {
        std::int32_t t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num_ /= a;
        den_ /= a;
    }
}

struct Dimension {
    Rational mass;
    Rational length;
    Rational time;
    Rational temperature;

    constexpr Dimension operator*(const Dimension& o) const {
        return {mass + o.mass, length + o.length, time + o.time, temperature + o.temperature};
    }
    constexpr Dimension operator/(const Dimension& o) const {
        return {mass - o.mass, length - o.length, time - o.time, temperature - o.temperature};
    }
    constexpr Dimension pow(Rational p) const {
        return {mass * p, length * p, time * p, temperature * p};
    }
    constexpr bool is_dimensionless() const {
        return mass.is_zero() && length.is_zero() && time.is_zero() && temperature.is_zero();
    }
    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    /// e.g. "g^1/2 cm^-1/2 s^-1"; "1" when dimensionless.
    std::string to_string() const;
};

namespace dim {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension mass{1, 0, 0, 0};
inline constexpr Dimension length{0, 1, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0};
inline constexpr Dimension temperature{0, 0, 0, 1};
inline constexpr Dimension charge{{1, 2}, {3, 2}, -1, 0};
inline constexpr Dimension velocity = length / time;
inline constexpr Dimension acceleration = velocity / time;
inline constexpr Dimension jerk = acceleration / time;
inline constexpr Dimension energy = mass * velocity * velocity;
inline constexpr Dimension action = energy * time;
inline constexpr Dimension inverse_length = dimensionless / length;
inline constexpr Dimension number_density = dimensionless / (length * length * length);
/// Electric and magnetic field (statvolt/cm == gauss).
inline constexpr Dimension field = charge / (length * length);
inline constexpr Dimension magnetic_moment = energy / field;
inline constexpr Dimension current_density = charge / (length * length * time);
inline constexpr Dimension heat_capacity = energy / temperature;
inline constexpr Dimension gravitational = length * length * length / (mass * time * time);
}  // namespace dim

/// A magnitude in canonical Gaussian-CGS units tagged with its dimension.
class Quantity {
  public:
    constexpr Quantity() = default;
    constexpr Quantity(double value, Dimension d) : value_(value), dim_(d) {}
    static constexpr Quantity scalar(double v) { return {v, dim::dimensionless}; }

    constexpr double value() const { return value_; }
    constexpr const Dimension& dimension() const { return dim_; }

    /// Value, after checking that the dimension is `expected`.
    double in(const Dimension& expected) const;

    Quantity& operator+=(const Quantity& o);
    Quantity& operator-=(const Quantity& o);

    friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
    friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
    friend Quantity operator-(const Quantity& a) { return {-a.value_, a.dim_}; }
    friend Quantity operator*(const Quantity& a, const Quantity& b) {
        return {a.value_ * b.value_, a.dim_ * b.dim_};
    }
    friend Quantity operator/(const Quantity& a, const Quantity& b) {
        return {a.value_ / b.value_, a.dim_ / b.dim_};
    }
    friend Quantity operator*(double s, const Quantity& q) { return {s * q.value_, q.dim_}; }
    friend Quantity operator*(const Quantity& q, double s) { return {s * q.value_, q.dim_}; }
    friend Quantity operator/(const Quantity& q, double s) { return {q.value_ / s, q.dim_}; }
    friend Quantity operator/(double s, const Quantity& q) {
        return {s / q.value_, Dimension{} / q.dim_};
    }

    /// Throws DimensionError naming both dimensions when they differ.
    friend std::partial_ordering operator<=>(const Quantity& a, const Quantity& b);
    friend bool operator==(const Quantity& a, const Quantity& b);

  private:
    double value_ = 0.0;
    Dimension dim_{};
};

Quantity sqrt(const Quantity& q);
Quantity abs(const Quantity& q);
Quantity pow(const Quantity& q, Rational p);

/// Throws DimensionError unless `a` and `b` have the same dimension.
void require_same_dimension(const Dimension& a, const Dimension& b, std::string_view context);

/// Dimension of one of the registered CGS unit strings used by the data
/// tables ("erg", "erg*s", "cm/s", "esu", "g", "erg/K", "erg/G", "G",
/// "statvolt/cm", "cm^3/(g*s^2)", ...). Throws LookupError otherwise.
Dimension parse_cgs_unit(std::string_view unit);

// ---------------------------------------------------------------------------
// Display units. Internals never leave CGS; conversion happens at I/O only.
// ---------------------------------------------------------------------------

struct DisplayValue {
    double value = 0.0;
    std::string unit;
};

struct DisplayUnit {
    std::string symbol;
    Dimension dimension;
    /// Display value per canonical CGS unit.
    double factor;
};

/// All registered display units, in registration order.
const std::vector<DisplayUnit>& display_units();

/// Converts to the default SI display unit for the quantity's dimension
/// (field -> N/C, energy -> J, velocity -> m/s, ...). Throws LookupError
/// ("no display unit") for dimensions without one.
DisplayValue to_si(const Quantity& q);

/// Converts to a named display unit (e.g. "N/C", "G", "T", "eV").
DisplayValue to_display(const Quantity& q, std::string_view unit);

/// Inverse of to_si / to_display.
Quantity from_si(const DisplayValue& v);

}  // namespace maxaccel
