#include <doctest.h>

#include <cmath>

#include "maxaccel/constants.hpp"
#include "maxaccel/errors.hpp"
#include "maxaccel/units.hpp"

using namespace maxaccel;

TEST_CASE("rational exponents normalize") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(3, 2) * Rational(2) == Rational(3));
}

TEST_CASE("charge squared is energy times length") {
    CHECK(dim::charge * dim::charge == dim::energy * dim::length);
    // E and B share a dimension in Gaussian units.
    CHECK(dim::field == dim::charge / (dim::length * dim::length));
    CHECK(dim::magnetic_moment * dim::field == dim::energy);
}

TEST_CASE("quantity arithmetic tracks dimension") {
    const Quantity m{2.0, dim::mass};
    const Quantity v{3.0, dim::velocity};
    const Quantity e = 0.5 * m * v * v;
    CHECK(e.dimension() == dim::energy);
    CHECK(e.value() == doctest::Approx(9.0));
    CHECK(sqrt(2.0 * e / m).dimension() == dim::velocity);
    CHECK(pow(v, Rational(2)).dimension() == dim::velocity * dim::velocity);
    CHECK(e.in(dim::energy) == 9.0);
    CHECK_THROWS_AS((void)e.in(dim::mass), DimensionError);
}

TEST_CASE("mismatched addition and comparison throw") {
    const Quantity a{1.0, dim::length};
    const Quantity b{1.0, dim::time};
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS((void)(a < b), DimensionError);
    CHECK(Quantity{1.0, dim::length} < Quantity{2.0, dim::length});
}

TEST_CASE("cgs unit strings") {
    CHECK(parse_cgs_unit("erg*s") == dim::action);
    CHECK(parse_cgs_unit("statvolt/cm") == dim::field);
    CHECK(parse_cgs_unit("G") == dim::field);
    CHECK_THROWS_AS(parse_cgs_unit("furlong"), LookupError);
}

TEST_CASE("field conversions") {
    // 1 statvolt/cm = 29979.2458 N/C
    const Quantity one_statvolt_cm{1.0, dim::field};
    const DisplayValue si = to_si(one_statvolt_cm);
    CHECK(si.unit == "N/C");
    CHECK(si.value == doctest::Approx(29979.2458).epsilon(1e-12));
    CHECK(to_display(Quantity{1e4, dim::field}, "T").value == doctest::Approx(1.0));
    const Quantity back = from_si({4.2, "N/C"});
    CHECK(back.dimension() == dim::field);
    CHECK(to_si(back).value == doctest::Approx(4.2).epsilon(1e-15));
    CHECK_THROWS_AS(to_display(one_statvolt_cm, "J"), DimensionError);
    CHECK_THROWS_AS(to_display(one_statvolt_cm, "parsec"), LookupError);
}

TEST_CASE("energy and acceleration conversions") {
    CHECK(to_display(Quantity{1.602176634e-12, dim::energy}, "eV").value ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(to_si(Quantity{100.0, dim::acceleration}).value == doctest::Approx(1.0));
    CHECK(to_si(Quantity{1.0, dim::acceleration}).unit == "m/s^2");
}

TEST_CASE("pinned constants") {
    const auto& k = constants();
    CHECK(k.c == 2.99792458e10);
    CHECK(k.hbar == doctest::Approx(1.054571817e-27).epsilon(1e-15));
    CHECK(k.m_e == doctest::Approx(9.1093837015e-28).epsilon(1e-15));
    CHECK(constant("hbar").dimension() == dim::action);
    CHECK(constant("e").dimension() == dim::charge);
    CHECK_THROWS_AS(constant("planck_length"), LookupError);
}

TEST_CASE("derived constants agree with published values") {
    const auto& k = constants();
    // Published mu_B = 9.2740100783e-21 erg/G; derived from e, hbar, m_e, c.
    CHECK(k.mu_B == doctest::Approx(9.2740100783e-21).epsilon(1e-8));
    CHECK(k.mu_B == doctest::Approx(k.e * k.hbar / (2.0 * k.m_e * k.c)).epsilon(1e-15));
    CHECK(k.m_P == doctest::Approx(2.176434e-5).epsilon(1e-5));
    CHECK(constant("mu_B").dimension() == dim::magnetic_moment);
}

TEST_CASE("constants table parsing") {
    const auto table = ConstantsTable::parse(
        "# comment\n"
        "hbar 1.054571817e-27 erg*s exact\n"
        "c 2.99792458e10 cm/s exact\n"
        "e 4.803204712570263e-10 esu exact\n"
        "m_e 9.1093837015e-28 g measured\n"
        "G 6.67430e-8 cm^3/(g*s^2) measured\n");
    CHECK(table.get("c").value() == 2.99792458e10);
    CHECK(table.get("mu_B").dimension() == dim::magnetic_moment);
    CHECK_THROWS_AS(ConstantsTable::parse("c abc cm/s x\n"), ParseError);
    CHECK_THROWS_AS(ConstantsTable::parse("c 1 furlong x\n"), LookupError);
}
