#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "maxaccel/accel_bounds.hpp"
#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"
#include "maxaccel/london_sphere.hpp"

using namespace maxaccel;
using namespace maxaccel::london;

namespace {

constexpr double kPi = std::numbers::pi;

Material material() { return reconstruction_material(); }

SphereProblem problem_at(double beta_radius, double b0 = 100.0) {
    const double beta = 1.0 / 5e-6;
    return SphereProblem({beta_radius / beta, dim::length}, {b0, dim::field}, material());
}

template <class F>
double d4(F&& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("beta and penetration depth") {
    CHECK(penetration_depth(material()).value() == doctest::Approx(5e-6).epsilon(1e-12));
    const auto m = Material::electron_gas("n1e22", {1e22, dim::number_density}, {500.0, dim::field},
                                          {3.7, dim::temperature}, {4.5e-12, dim::energy});
    CHECK(beta(m).value() == doctest::Approx(1.88179e5).epsilon(1e-5));
    CHECK(material().density.value() == doctest::Approx(1.12958348833e22).epsilon(1e-9));
    const Material pairs = m.as_cooper_pairs();
    CHECK(beta(pairs).value() == doctest::Approx(beta(m).value()).epsilon(1e-14));
    CHECK(pairs.mass.value() == doctest::Approx(2.0 * m.mass.value()));
}

TEST_CASE("material presets") {
    const auto& cat = MaterialCatalog::presets();
    CHECK(cat.materials().size() >= 4);
    CHECK(cat.find("Pb").critical_field.value() > 0.0);
    CHECK_THROWS_AS(cat.find("unobtainium"), LookupError);
    CHECK_THROWS_AS(Material::electron_gas("x", {-1.0, dim::number_density}, {1.0, dim::field},
                                           {1.0, dim::temperature}, {1.0, dim::energy}),
                    DomainError);
}

TEST_CASE("problem and domain validation") {
    CHECK_THROWS_AS(SphereProblem({0.0, dim::length}, {1.0, dim::field}, material()), DomainError);
    CHECK_THROWS_AS(SphereProblem({1.0, dim::length}, {-1.0, dim::field}, material()), DomainError);
    const SphereField f(problem_at(5.0));
    CHECK_THROWS_AS(f.at(2.0 * f.radius(), 0.5), DomainError);
    CHECK_THROWS_AS(f.at(0.5 * f.radius(), 4.0), DomainError);
    CHECK_THROWS_AS(field_map(problem_at(5.0), 1, 10), DomainError);
}

TEST_CASE("field at the centre is uniform and reduced by X / sinh X") {
    for (double X : {0.5, 3.0, 20.0}) {
        const SphereField f(problem_at(X, 100.0));
        const auto s = f.at(0.0, 0.0);
        CHECK(s.B_r == doctest::Approx(100.0 * X / std::sinh(X)).epsilon(1e-12));
        CHECK(s.B_theta == doctest::Approx(0.0));
        const auto e = f.at(0.0, kPi / 2);
        CHECK(e.B_theta == doctest::Approx(-100.0 * X / std::sinh(X)).epsilon(1e-12));
        CHECK(e.j_phi == 0.0);
    }
}

TEST_CASE("surface field in the thin-layer limit") {
    const double X = 1e4;
    const SphereField f(problem_at(X, 100.0));
    const auto s = f.at(f.radius(), kPi / 2);
    // coth X = 1 to double precision here.
    CHECK(s.B_theta == doctest::Approx(-150.0 * (1.0 - 1.0 / X + 1.0 / (X * X))).epsilon(1e-13));
    CHECK(f.at(f.radius(), 0.0).B_r == doctest::Approx(300.0 * (1.0 / X - 1.0 / (X * X))).epsilon(1e-13));
    CHECK(s.B_theta == doctest::Approx(-150.0 * (1.0 - 1.0 / X)).epsilon(1e-7));
}

TEST_CASE("screening current opposes the applied field") {
    const SphereField f(problem_at(10.0, 100.0));
    const auto s = f.at(f.radius(), kPi / 2);
    CHECK(s.j_phi < 0.0);
    CHECK(s.v_phi < 0.0);
    // v0 = (e / m c) lambda B_theta at the surface for a thin layer.
    const SphereField thin(problem_at(1e4, 100.0));
    const auto t = thin.at(thin.radius(), kPi / 2);
    CHECK(std::fabs(t.v_phi) ==
          doctest::Approx(thin.charge_over_mc() * 5e-6 * std::fabs(t.B_theta)).epsilon(1e-3));
}

TEST_CASE("series and exponential branches join continuously") {
    const SphereField f(problem_at(4.0, 100.0));
    const double r1 = 1.0 / f.beta();
    const auto lo = f.at(r1 * (1.0 - 1e-12), 0.7);
    const auto hi = f.at(r1 * (1.0 + 1e-12), 0.7);
    CHECK(lo.B_r == doctest::Approx(hi.B_r).epsilon(1e-10));
    CHECK(lo.B_theta == doctest::Approx(hi.B_theta).epsilon(1e-10));
    CHECK(lo.j_phi == doctest::Approx(hi.j_phi).epsilon(1e-10));
}

TEST_CASE("closed-form dv/dr matches finite differences") {
    const SphereField f(problem_at(6.0, 100.0));
    const double h = 1e-4 / f.beta();
    for (double frac : {0.2, 0.5, 0.9}) {
        const double r = frac * f.radius();
        const double num = d4([&](double rr) { return f.v_phi(rr, 1.1); }, r, h);
        CHECK(f.dv_phi_dr(r, 1.1) == doctest::Approx(num).epsilon(1e-8));
    }
}

TEST_CASE("London equation residual is small and converges at second order") {
    const auto p = problem_at(4.0, 200.0);
    const auto report = london_curl_check(p);
    CHECK(report.satisfied);
    const SphereField f(p);
    auto velocity = [&](double r, double t) { return SphericalVector{0.0, 0.0, f.v_phi(r, t)}; };
    auto field = [&](double r, double t) {
        const auto s = f.at(r, t);
        return SphericalVector{s.B_r, s.B_theta, 0.0};
    };
    const double coarse = london_curl_residual(velocity, field, f.charge_over_mc(), f.radius(),
                                               1.0 / f.beta(), {20, 20, 1e-2});
    const double fine = london_curl_residual(velocity, field, f.charge_over_mc(), f.radius(),
                                             1.0 / f.beta(), {20, 20, 5e-3});
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("field map CSV round-trips exactly") {
    const auto samples = field_map(problem_at(3.0, 75.0), 7, 5);
    REQUIRE(samples.size() == 35);
    CHECK(samples.front().r == 0.0);
    CHECK(samples.back().theta == kPi);
    std::stringstream buf;
    write_field_csv(buf, samples);
    CHECK(buf.str().rfind("r_cm,theta_rad,Br_G,Btheta_G,jphi_cgs,vphi_cm_s\n", 0) == 0);
    const auto back = read_field_csv(buf);
    REQUIRE(back.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(back[i].r == samples[i].r);
        CHECK(back[i].theta == samples[i].theta);
        CHECK(back[i].B_r == samples[i].B_r);
        CHECK(back[i].B_theta == samples[i].B_theta);
        CHECK(back[i].j_phi == samples[i].j_phi);
        CHECK(back[i].v_phi == samples[i].v_phi);
    }
    std::stringstream bad("r_cm,theta_rad\n1,2\n");
    CHECK_THROWS_AS(read_field_csv(bad), ParseError);
}

TEST_CASE("Fermi-gas statistics") {
    const auto s = fermi_stats(material(), {0.0, dim::temperature});
    CHECK(s.energy_spread.value() == doctest::Approx(2.7e-12).epsilon(1e-12));
    CHECK(s.velocity_spread.value() == doctest::Approx(7.45483e7).epsilon(1e-5));
    CHECK_FALSE(s.normal_state);
    const auto warm = fermi_stats(material(), {3.0, dim::temperature});
    CHECK(warm.chemical_potential.value() ==
          doctest::Approx(4.5e-12 - 3.1356e-20).epsilon(1e-14));
    CHECK(fermi_stats(material(), {10.0, dim::temperature}).normal_state);
    CHECK_THROWS_AS(fermi_stats(material(), {-1.0, dim::temperature}), DomainError);
}

TEST_CASE("convective acceleration forms agree") {
    const SphereField f(problem_at(5.0, 300.0));
    const auto stats = fermi_stats(material(), {0.0, dim::temperature});
    for (double frac : {0.3, 0.8, 1.0}) {
        for (double theta : {0.4, kPi / 2, 2.5}) {
            const double r = frac * f.radius();
            const auto a = convective_acceleration(f, r, theta, stats);
            const double v = f.v_phi(r, theta);
            CHECK(a.magnitude.value() == doctest::Approx(v * v / (r * std::sin(theta))).epsilon(1e-14));
            CHECK(a.identity_form.value() == doctest::Approx(a.magnitude.value()).epsilon(1e-6));
            CHECK(a.levi_civita_form.value() == doctest::Approx(a.magnitude.value()).epsilon(1e-6));
            CHECK(a.bound.satisfied);
        }
    }
    const auto origin = convective_acceleration(f, 0.0, 0.5, stats);
    CHECK(origin.magnitude.value() == 0.0);
}

TEST_CASE("rate bound from Fermi statistics") {
    const auto stats = fermi_stats(material(), {0.0, dim::temperature});
    const auto a = convective_acceleration(SphereField(problem_at(5.0)), 1e-5, 1.0, stats);
    const double bound = accel::rate_bound(stats.energy_spread, stats.velocity_spread).value();
    CHECK(a.bound.rhs.value() == doctest::Approx(bound).epsilon(1e-14));
    CHECK(bound == doctest::Approx(3.81738e23).epsilon(1e-4));
}

TEST_CASE("consistency scan of a solved sphere") {
    const auto stats = fermi_stats(material(), {0.0, dim::temperature});
    const auto scan = ma_consistency_scan(problem_at(20.0, 500.0 / 1.5), stats, 30, 30);
    CHECK(scan.points == 900);
    CHECK(scan.violations == 0);
    CHECK(scan.max_ratio > 0.0);
    CHECK(scan.max_ratio < 1.0);
}
