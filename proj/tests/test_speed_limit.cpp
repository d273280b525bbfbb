#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maxaccel/constants.hpp"
#include "maxaccel/speed_limit.hpp"

using namespace maxaccel;
using namespace maxaccel::speed_limit;

namespace {
const double kHbar = constants().hbar;
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("state validation") {
    CHECK_THROWS_AS(QuantumState({}), DomainError);
    CHECK_THROWS_AS(QuantumState({{-1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(QuantumState({{0.0, 0.4}, {1.0, 0.4}}), DomainError);
    CHECK_THROWS_AS(QuantumState({{0.0, 1.5}, {1.0, -0.5}}), DomainError);
    CHECK_THROWS_AS(QuantumState({{NAN, 1.0}}), DomainError);
}

TEST_CASE("levels are sorted and duplicates merged") {
    const QuantumState s({{2.0, 0.25}, {0.0, 0.5}, {2.0, 0.25}});
    REQUIRE(s.size() == 2);
    CHECK(s.levels()[0].energy == 0.0);
    CHECK(s.levels()[1].weight == doctest::Approx(0.5));
    CHECK(s.max_energy() == 2.0);
}

TEST_CASE("normalized and shifted constructors") {
    const auto n = QuantumState::normalized({{0.0, 1.0}, {1.0, 3.0}});
    CHECK(n.levels()[1].weight == doctest::Approx(0.75));
    const auto g = QuantumState::shift_to_ground({{-2.0, 0.5}, {1.0, 0.5}});
    CHECK(g.levels()[0].energy == 0.0);
    CHECK(g.levels()[1].energy == doctest::Approx(3.0));
}

TEST_CASE("overlap follows the pi phase convention") {
    const double e1 = 1e-12;
    const QuantumState s({{0.0, 0.5}, {e1, 0.5}});
    const Overlap s0 = overlap(s, 0.0);
    CHECK(s0.re == doctest::Approx(1.0));
    CHECK(s0.im == doctest::Approx(0.0));
    const double t = 0.3 * kHbar / e1;
    const Overlap st = overlap(s, t);
    CHECK(st.re == doctest::Approx(0.5 * (1.0 + std::cos(kPi * 0.3))));
    CHECK(st.im == doctest::Approx(-0.5 * std::sin(kPi * 0.3)));
    CHECK(st.norm() == doctest::Approx(std::fabs(std::cos(kPi * 0.15))));
}

TEST_CASE("moments and bounds") {
    const QuantumState s({{0.0, 0.5}, {2.0, 0.5}});
    const auto m = mean_and_spread(s);
    CHECK(m.mean == doctest::Approx(1.0));
    CHECK(m.spread == doctest::Approx(1.0));
    const auto b = bounds(s);
    REQUIRE(b.heisenberg);
    REQUIRE(b.margolus_levitin);
    CHECK(*b.heisenberg == doctest::Approx(kHbar / 2.0));
    CHECK(*b.margolus_levitin == doctest::Approx(kHbar / 2.0));

    const auto single = bounds(QuantumState({{0.0, 1.0}}));
    CHECK_FALSE(single.heisenberg);
    CHECK_FALSE(single.margolus_levitin);
    CHECK_FALSE(single.tightest());
}

TEST_CASE("two-level zero at hbar / E1") {
    const double e1 = 3.7e-13;
    const QuantumState s({{0.0, 0.5}, {e1, 0.5}});
    const auto r = first_orthogonality_time(s, 4.0 * kHbar / e1);
    REQUIRE(r.found());
    const auto z = std::get<FoundZero>(r.kind);
    CHECK(z.time == doctest::Approx(kHbar / e1).epsilon(1e-10));
    CHECK(z.residual <= 1e-9);
    CHECK(ml_certificate(s, z.time).satisfied);
}

TEST_CASE("equally weighted ladder reaches zero at 2 hbar / (N delta)") {
    const double delta = 1e-14;
    for (int n : {3, 4, 7}) {
        std::vector<EnergyLevel> levels;
        for (int k = 0; k < n; ++k) levels.push_back({k * delta, 1.0 / n});
        const QuantumState s(levels);
        const auto r = first_orthogonality_time(s, 4.0 * kHbar / delta);
        REQUIRE(r.found());
        CHECK(std::get<FoundZero>(r.kind).time ==
              doctest::Approx(2.0 * kHbar / (n * delta)).epsilon(1e-9));
    }
}

TEST_CASE("unequal two-level state is never orthogonal") {
    const double e1 = 1e-12;
    const QuantumState s({{0.0, 0.7}, {e1, 0.3}});
    const auto r = first_orthogonality_time(s, 4.0 * kHbar / e1);
    REQUIRE(std::holds_alternative<InfimumOnly>(r.kind));
    const auto m = std::get<InfimumOnly>(r.kind);
    CHECK(m.min_abs == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(m.time_at_min == doctest::Approx(kHbar / e1).epsilon(1e-6));
}

TEST_CASE("single level never orthogonal") {
    const auto r = first_orthogonality_time(QuantumState({{5e-13, 1.0}}), 1.0);
    CHECK(std::holds_alternative<NeverOrthogonal>(r.kind));
}

TEST_CASE("window too large is a sizing error") {
    const double e1 = 1e-12;
    const QuantumState s({{0.0, 0.5}, {e1, 0.5}});
    SearchOptions opts;
    opts.max_samples = 1000;
    try {
        (void)first_orthogonality_time(s, 1e6 * kHbar / e1, opts);
        FAIL("expected SizingError");
    } catch (const SizingError& e) {
        CHECK(e.suggested_window() > 0.0);
        CHECK(e.suggested_window() < 1e6 * kHbar / e1);
    }
    CHECK_THROWS_AS(first_orthogonality_time(s, -1.0), DomainError);
}

TEST_CASE("cosine inequality") {
    CHECK(cosine_inequality_holds(0.0));
    CHECK(cosine_inequality_holds(kPi));
    CHECK(cosine_inequality_holds(1.0));
    CHECK(cosine_inequality_holds(500.0));
}

TEST_CASE("certificate detects a time below the bound only through S") {
    // At t = 0 the certificate reads 1 >= 1.
    const QuantumState s({{0.0, 0.25}, {1e-12, 0.25}, {3e-12, 0.5}});
    CHECK(ml_certificate(s, 0.0).satisfied);
    for (double f : {0.01, 0.1, 0.5, 1.0, 10.0}) {
        CHECK(ml_certificate(s, f * kHbar / 1e-12).satisfied);
    }
}
