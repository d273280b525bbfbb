#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"
#include "maxaccel/london_bounds.hpp"

using namespace maxaccel;
using namespace maxaccel::london;

namespace {
const Quantity kV0{4.4e4, dim::velocity};
Quantity gauss(double b) { return {b, dim::field}; }
double n_per_c(const Quantity& q) { return to_display(q, "N/C").value; }
}  // namespace

TEST_CASE("equator bound without field") {
    const Quantity e = er_bound_equator(kV0, gauss(0.0));
    CHECK(e.dimension() == dim::field);
    CHECK(e.value() == doctest::Approx(1.3954965e-4).epsilon(1e-7));
    CHECK(n_per_c(e) == doctest::Approx(4.18359).epsilon(1e-5));
}

TEST_CASE("inferred polar field reproduces the bound") {
    const Quantity target = from_si({69.0, "N/C"});
    const Quantity b = infer_equator_polar_field(kV0, target);
    CHECK(b.value() == doctest::Approx(1473.100).epsilon(1e-6));
    CHECK(n_per_c(er_bound_equator(kV0, b)) == doctest::Approx(69.0).epsilon(1e-12));
    CHECK(n_per_c(er_bound_equator(kV0, gauss(1.47e3))) == doctest::Approx(68.86).epsilon(1e-3));
    CHECK_THROWS_AS(infer_equator_polar_field(kV0, from_si({1.0, "N/C"})), DomainError);
}

TEST_CASE("equator form is the general form at B_r = 0") {
    const auto& k = constants();
    const Quantity de{0.5 * k.m_e * kV0.value() * kV0.value(), dim::energy};
    const Quantity general = er_bound_general(kV0, gauss(0.0), gauss(800.0), de, kV0);
    CHECK(general.value() ==
          doctest::Approx(er_bound_equator(kV0, gauss(800.0)).value()).epsilon(1e-14));
}

TEST_CASE("general bound reality condition") {
    const Quantity de{2.7e-12, dim::energy};
    const Quantity dv{7.45e7, dim::velocity};
    const double br_star = reality_threshold(de).value();
    CHECK(br_star == doctest::Approx(2.91136e8).epsilon(1e-5));
    // With v_phi = dv the square root vanishes exactly at B_r = B_r*.
    CHECK_NOTHROW(er_bound_general(dv, gauss(br_star), gauss(0.0), de, dv));
    CHECK(er_bound_general(dv, gauss(br_star), gauss(0.0), de, dv).value() ==
          doctest::Approx(0.0).epsilon(1e-6));
    CHECK_THROWS_AS(er_bound_general(dv, gauss(1.01 * br_star), gauss(0.0), de, dv), DomainError);
    CHECK(reality_condition(de, gauss(500.0)).satisfied);
    CHECK_FALSE(reality_condition(de, gauss(1.01 * br_star)).satisfied);
    CHECK_THROWS_AS(er_bound_general(kV0, gauss(0.0), gauss(0.0), {-1.0, dim::energy}, dv),
                    DomainError);
    CHECK_THROWS_AS(er_bound_general(kV0, gauss(0.0), gauss(0.0), de, {1.0, dim::length}),
                    DimensionError);
}

TEST_CASE("statistical bound") {
    const Material m = reconstruction_material();
    const Quantity e = er_bound_statistical(m, {0.0, dim::temperature}, gauss(0.0), gauss(0.0));
    CHECK(e.value() == doctest::Approx(7.23958e5).epsilon(1e-5));
    CHECK(n_per_c(e) == doctest::Approx(2.17037e10).epsilon(1e-5));
}

TEST_CASE("verbatim forms differ from the repaired ones") {
    const auto& k = constants();
    const double repaired = er_bound_equator(kV0, gauss(0.0)).value();
    const double verbatim = er_bound_equator_verbatim(kV0.value(), 0.0);
    // The typeset kinetic term lacks the carrier mass.
    CHECK(verbatim / repaired == doctest::Approx(1.0 / k.m_e).epsilon(1e-12));
    const double gen = er_bound_general_verbatim(1e4, 0.0, 0.0, 2.7e-12, 7.45e7);
    const double gen_repaired =
        er_bound_general({1e4, dim::velocity}, gauss(0.0), gauss(0.0), {2.7e-12, dim::energy},
                         {7.45e7, dim::velocity})
            .value();
    CHECK(gen / gen_repaired == doctest::Approx(k.c).epsilon(1e-12));
    CHECK(er_bound_statistical_verbatim(reconstruction_material(), 0.0, 0.0) > 0.0);
}

TEST_CASE("surface velocity and London field") {
    const Material m = reconstruction_material();
    const Quantity lambda{5e-6, dim::length};
    const Quantity v = surface_velocity(m, lambda, gauss(500.0));
    CHECK(v.value() == doctest::Approx(43970.5).epsilon(1e-5));
    const Quantity e = er_london(m, kV0, lambda);
    CHECK(e.value() == doctest::Approx(7.3433e-4).epsilon(1e-4));
    CHECK(n_per_c(e) == doctest::Approx(22.0148).epsilon(1e-5));
    CHECK_THROWS_AS(er_london(m, kV0, {0.0, dim::length}), DomainError);
}

TEST_CASE("London field of the solved sphere approaches the boundary-layer value") {
    const Material m = reconstruction_material();
    const double X = 1e4;
    const SphereProblem p({X * 5e-6, dim::length}, {100.0, dim::field}, m);
    const SphereField f(p);
    const double v0 = std::fabs(f.v_phi(f.radius(), std::numbers::pi / 2));
    const Quantity profile = er_london_profile(f, m);
    const Quantity layer = er_london(m, {v0, dim::velocity}, {5e-6, dim::length});
    CHECK(profile.value() == doctest::Approx(layer.value()).epsilon(2e-3));
}
