#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fkpp/exact.hpp"
#include "fkpp/stationary.hpp"

using namespace fkpp;

TEST_CASE("SG amplitude factor") {
    SUBCASE("stationary for C0 = 0") {
        for (double t : {0.0, 0.5, 2.0, 10.0})
            CHECK(sg_phi(2.0, 0.0, t) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("finite blow-up time for C0 < 0") {
        SeparableSolution sol(SeparableSolution::Family::SG, 2.0, -0.25);
        REQUIRE(sol.event_time());
        CHECK(*sol.event_time() == doctest::Approx(std::log(4.0)).epsilon(1e-14));
        CHECK(sol.behavior() == SeparableSolution::Behavior::BlowUp);
        CHECK(sg_phi(2.0, -0.25, 1.386) > 1e2);
        CHECK_THROWS_AS(sg_phi(2.0, -0.25, 1.3863), std::invalid_argument);
        CHECK_THROWS_AS(sg_phi(2.0, -0.25, 5.0), std::invalid_argument);
    }
    SUBCASE("vanishing for C0 > 0") {
        CHECK(sg_phi(2.0, 1.0, 40.0) < 1e-15);
        SeparableSolution sol(SeparableSolution::Family::SG, 2.0, 1.0);
        CHECK(sol.behavior() == SeparableSolution::Behavior::Vanishing);
        // Strictly decreasing amplitude.
        double prev = sg_phi(2.0, 1.0, 0.0);
        for (double t : {0.25, 0.5, 1.0, 2.0}) {
            const double v = sg_phi(2.0, 1.0, t);
            CHECK(v < prev);
            prev = v;
        }
    }
    SUBCASE("amplitude increases toward blow-up for C0 < 0") {
        double prev = sg_phi(2.0, -0.25, 0.0);
        for (double t : {0.3, 0.6, 0.9, 1.2}) {
            const double v = sg_phi(2.0, -0.25, t);
            CHECK(v > prev);
            prev = v;
        }
    }
    SUBCASE("m <= 1 rejected") { CHECK_THROWS_AS(sg_phi(1.0, 0.0, 0.0), std::invalid_argument); }
}

TEST_CASE("SG spatial profile") {
    const double L = 2.0 * M_PI * std::sqrt(2.0);
    CHECK(sg_support_half_width(2.0) == doctest::Approx(L / 2.0).epsilon(1e-14));
    CHECK(sg_theta(2.0, 0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(sg_theta(2.0, L / 2.0) == 0.0);
    CHECK(sg_theta(2.0, -L) == 0.0);

    // C0 = 0 (amplitude (m-1)^(1/(m-1)) = 1 at m = 2) reproduces the
    // stationary profile of (m, p, q) = (2, 2, 1).
    auto prof = build_profile(ModelParams(2.0, 2.0, 1.0));
    const double scale = std::pow(2.0 - 1.0, 1.0 / (2.0 - 1.0));
    for (int i = 0; i <= 50; ++i) {
        const double x = -L / 2.0 + L * i / 50.0;
        CHECK(std::abs(scale * sg_theta(2.0, x) - E_value(prof, x)) <= 1e-8);
    }
}

TEST_CASE("SV amplitude factor") {
    SUBCASE("stationary for C = 0") {
        for (double t : {0.0, 1.0, 7.0})
            CHECK(sv_phi(0.5, 0.0, t) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("extinction time for C in (0,1)") {
        SeparableSolution sol(SeparableSolution::Family::SV, 0.5, 0.5);
        REQUIRE(sol.event_time());
        CHECK(*sol.event_time() == doctest::Approx(std::log(4.0)).epsilon(1e-14));
        CHECK(sol.behavior() == SeparableSolution::Behavior::Extinction);
        CHECK_THROWS_AS(sv_phi(0.5, 0.5, 1.3863), std::invalid_argument);
    }
    SUBCASE("unbounded growth for C < 0") {
        SeparableSolution sol(SeparableSolution::Family::SV, 0.5, -1.0);
        CHECK(sol.behavior() == SeparableSolution::Behavior::Growth);
        double prev = sv_phi(0.5, -1.0, 0.0);
        for (double t : {1.0, 2.0, 4.0, 8.0}) {
            const double v = sv_phi(0.5, -1.0, t);
            CHECK(v > prev);
            prev = v;
        }
        CHECK(sv_phi(0.5, -1.0, 50.0) > 1e10);
    }
    SUBCASE("the two algebraic forms agree") {
        for (double c : {-1.0, -0.2, 0.0, 0.3, 0.9}) {
            for (double t : {0.0, 0.2, 0.7, 1.2}) {
                if (c > 0.0 && t >= std::log(c) / (0.5 - 1.0)) continue;
                CHECK(sv_phi(0.5, c, t) ==
                      doctest::Approx(sv_phi_alt(0.5, c, t)).epsilon(1e-13));
            }
        }
    }
    SUBCASE("m outside (0,1) rejected") {
        CHECK_THROWS_AS(sv_phi(1.5, 0.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(SeparableSolution(SeparableSolution::Family::SV, 2.0, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("SV spatial profile") {
    CHECK(sv_theta(0.5, 0.0) == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(sv_theta(0.5, 60.0) < 1e-10);
    CHECK(sv_theta(0.5, -60.0) < 1e-10);
    for (double x : {0.0, 1.0, 10.0}) CHECK(sv_theta(0.5, x) > 0.0);

    // Coincides with the stationary profile of (m, p, q) = (1/2, 1, 1/2).
    auto prof = build_profile(ModelParams(0.5, 1.0, 0.5));
    for (int i = 0; i <= 40; ++i) {
        const double x = -8.0 + 16.0 * i / 40.0;
        CHECK(std::abs(sv_theta(0.5, x) - E_value(prof, x)) <= 1e-8);
    }
    // k1 of the profile reduces to (1-m)/sqrt(m).
    CHECK(prof.k1 == doctest::Approx((1.0 - 0.5) / std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("event times match bisection on the bracket zero") {
    SeparableSolution sg(SeparableSolution::Family::SG, 2.0, -0.25);
    CHECK(std::abs(event_time_bisect(sg) - *sg.event_time()) <= 1e-10);
    SeparableSolution sg2(SeparableSolution::Family::SG, 3.0, -0.05);
    CHECK(std::abs(event_time_bisect(sg2) - *sg2.event_time()) <= 1e-10);
    SeparableSolution sv(SeparableSolution::Family::SV, 0.5, 0.5);
    CHECK(std::abs(event_time_bisect(sv) - *sv.event_time()) <= 1e-10);
    SeparableSolution none(SeparableSolution::Family::SG, 2.0, 0.0);
    CHECK_THROWS_AS(event_time_bisect(none), std::invalid_argument);
}

TEST_CASE("closed forms satisfy the PDE to discretization accuracy") {
    SUBCASE("SG stationary and vanishing") {
        for (double c0 : {0.0, 1.0}) {
            SeparableSolution sol(SeparableSolution::Family::SG, 2.0, c0);
            for (double x : {0.0, 0.8, 2.0}) {
                for (double t : {0.1, 0.6}) {
                    CHECK(std::abs(separable_residual(sol, x, t)) < 1e-5);
                }
            }
        }
    }
    SUBCASE("SV stationary and growing") {
        for (double c : {0.0, -0.5}) {
            SeparableSolution sol(SeparableSolution::Family::SV, 0.5, c);
            for (double x : {0.0, 1.2}) {
                for (double t : {0.1, 0.5}) {
                    CHECK(std::abs(separable_residual(sol, x, t)) < 1e-5);
                }
            }
        }
    }
}
