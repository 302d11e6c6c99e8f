#include <doctest.h>

#include <cmath>

#include "conical_shock/gas.hpp"

using namespace conical_shock;

TEST_CASE("derived parameters at eps = 0.1, E0 = 1") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    CHECK(gp.gamma == doctest::Approx(1.1).epsilon(1e-15));
    CHECK(gp.Eprime == 0.5);
    // p0 = (0.1/1.1) * 0.5 = 1/22
    CHECK(gp.p0 == doctest::Approx(1.0 / 22.0).epsilon(1e-15));
    // M0^2 = 1/(eps * Eprime) = 20
    CHECK(gp.M0 * gp.M0 == doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("unit Mach head: eps = 1, E0 = 1 gives M0 = sqrt(2)") {
    const gas_parameters gp = derive_parameters(1.0, 1.0);
    CHECK(gp.M0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("Mach-Bernoulli identity eps * Eprime * M0^2 = 1 across parameters") {
    const double eps_grid[] = {1e-3, 1e-2, 0.05, 0.1, 0.4, 1.0, 2.0};
    const double E0_grid[] = {0.6, 1.0, 2.5, 10.0, 1e4};
    for (double eps : eps_grid) {
        for (double E0 : E0_grid) {
            const gas_parameters gp = derive_parameters(eps, E0);
            CHECK(eps * gp.Eprime * gp.M0 * gp.M0 ==
                  doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("parameter domain is enforced") {
    CHECK_THROWS_AS(derive_parameters(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(derive_parameters(-0.1, 1.0), domain_error);
    CHECK_THROWS_AS(derive_parameters(0.1, 0.5), domain_error);
    CHECK_THROWS_AS(derive_parameters(0.1, 0.4), domain_error);
    CHECK_THROWS_AS(derive_parameters(std::nan(""), 1.0), domain_error);
}

TEST_CASE("upstream state reproduces the upstream pressure exactly") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    // Unit speed at unit density is the upstream state; the state law must
    // return p0 to the bit.
    CHECK(pressure(1.0, 1.0, gp) == gp.p0);
}

TEST_CASE("pressure rejects non-physical states") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    CHECK_THROWS_AS(pressure(0.0, 1.0, gp), non_physical_error);
    CHECK_THROWS_AS(pressure(-1.0, 1.0, gp), non_physical_error);
    CHECK_THROWS_AS(pressure(1.0, 2.0, gp), non_physical_error);  // |V|^2 = 2 E0
    CHECK_THROWS_AS(pressure(1.0, 2.5, gp), non_physical_error);
    CHECK_THROWS_AS(pressure(1e-305, 1.0, gp), non_physical_error);  // underflow
}

TEST_CASE("sound speed squared matches gamma p / rho") {
    const gas_parameters gp = derive_parameters(0.07, 1.3);
    const double rho = 3.7, sq = 0.83;
    const double via_law = gp.eps * (gp.E0 - 0.5 * sq);
    CHECK(sound_speed_sq(rho, sq, gp) ==
          doctest::Approx(via_law).epsilon(1e-15));
    CHECK(sound_speed_sq(rho, sq, gp) ==
          doctest::Approx(gp.gamma * pressure(rho, sq, gp) / rho)
              .epsilon(1e-15));
}

TEST_CASE("flow state derives pressure, sound speed, Mach, normal speed") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    const double theta = 0.6;
    const flow_state s = make_flow_state(theta, 2.0, -0.3, 0.7, gp);
    CHECK(s.p == doctest::Approx(pressure(2.0, 0.09 + 0.49, gp)).epsilon(1e-15));
    CHECK(s.c == doctest::Approx(std::sqrt(gp.gamma * s.p / 2.0)).epsilon(1e-15));
    CHECK(s.Mn == doctest::Approx(0.3 / s.c).epsilon(1e-15));
    CHECK(s.q_out == doctest::Approx(0.7 * std::sin(theta) -
                                     0.3 * std::cos(theta)).epsilon(1e-15));
}

TEST_CASE("the upstream flow has zero outward normal speed on every sphere") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    for (double theta : {0.2, 0.7, 1.2, 1.5}) {
        const flow_state s =
            make_flow_state(theta, 1.0, -std::sin(theta), std::cos(theta), gp);
        CHECK(s.q_out == 0.0);
    }
}

TEST_CASE("entropy invariant is p over rho^gamma") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    const flow_state s = make_flow_state(0.6, 4.2, -0.119, 0.866, gp);
    CHECK(entropy_invariant(s, gp) ==
          doctest::Approx(s.p / std::pow(4.2, 1.1)).epsilon(1e-15));
}
