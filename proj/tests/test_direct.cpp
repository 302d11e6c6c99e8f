#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "conical_shock/direct.hpp"
#include "conical_shock/gas.hpp"
#include "conical_shock/oracle.hpp"
#include "conical_shock/taylor_maccoll.hpp"

using namespace conical_shock;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double deg = pi / 180.0;

}  // namespace

// ---------------------------------------------------------------------------
// Direct problem
// ---------------------------------------------------------------------------

TEST_CASE("direct solve hits the requested cone angle") {
    const gas_parameters gp = derive_parameters(0.01, 1.0);
    for (double t0deg : {10.0, 20.0, 30.0}) {
        const double theta0 = t0deg * deg;
        const direct_solution sol = solve_direct(theta0, gp, {});
        CHECK(sol.theta0 == theta0);
        CHECK(sol.residual < 1e-8);
        CHECK(sol.beta > theta0);
        CHECK(std::abs(sol.field.theta_cone - theta0) < 1e-8);
        CHECK(sol.field.grid.back().u == 0.0);
        CHECK(sol.iterations >= 1);
        // independent check: a fixed-step march from the solved shock angle
        // lands on the same cone
        const oracle_result orc = rk4_cone_angle(sol.beta, gp, 1e-4);
        CHECK(std::abs(orc.theta_cone - theta0) < 1e-7);
    }
}

TEST_CASE("solved shock angle at the 20-degree cone, eps = 0.01") {
    const gas_parameters gp = derive_parameters(0.01, 1.0);
    const direct_solution sol = solve_direct(20.0 * deg, gp, {});
    CHECK(sol.beta / deg == doctest::Approx(20.4898628235).epsilon(1e-7));
    CHECK(sol.field.surface_pressure ==
          doctest::Approx(0.123293345938).epsilon(1e-7));
}

TEST_CASE("shock angle grows with the cone angle") {
    const gas_parameters gp = derive_parameters(0.05, 1.0);
    const double b10 = solve_direct(10.0 * deg, gp, {}).beta;
    const double b20 = solve_direct(20.0 * deg, gp, {}).beta;
    const double b30 = solve_direct(30.0 * deg, gp, {}).beta;
    CHECK(b10 < b20);
    CHECK(b20 < b30);
}

TEST_CASE("cone angle map matches the inverse integration") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    const double beta = 30.0 * deg;
    CHECK(cone_angle_map(beta, gp, {}) ==
          integrate_inverse(beta, gp, {}).theta_cone);
}

TEST_CASE("loosening the angle tolerance moves the answer only slightly") {
    const gas_parameters gp = derive_parameters(0.05, 1.0);
    const double tight = solve_direct(20.0 * deg, gp, {}, 1e-10).beta;
    const double loose = solve_direct(20.0 * deg, gp, {}, 1e-6).beta;
    CHECK(std::abs(tight - loose) < 1e-5);
}

TEST_CASE("direct solve rejects bad cone angles and hopeless gases") {
    const gas_parameters gp = derive_parameters(0.1, 1.0);
    CHECK_THROWS_AS(solve_direct(0.0, gp, {}), domain_error);
    CHECK_THROWS_AS(solve_direct(-0.1, gp, {}), domain_error);
    CHECK_THROWS_AS(solve_direct(pi / 2.0, gp, {}), domain_error);
    CHECK_THROWS_AS(solve_direct(95.0 * deg, gp, {}), domain_error);
    // eps = 5 means a subsonic upstream (M0 < 1): no shock angle works
    const gas_parameters subsonic = derive_parameters(5.0, 1.0);
    CHECK_THROWS_AS(solve_direct(30.0 * deg, subsonic, {}), no_bracket_error);
}

// ---------------------------------------------------------------------------
// Inverse-solvability threshold
// ---------------------------------------------------------------------------

TEST_CASE("solvability threshold at the (0.2, 0.4) bracket") {
    const double got = epsilon_star(0.2, 0.4, 0.5);
    CHECK(got == doctest::Approx(0.016212).epsilon(1e-4));
    // recompute from the two competing estimates
    const double s_lo = std::sin(0.2) * std::sin(0.2);
    const double s_hi = std::sin(0.4) * std::sin(0.4);
    const double first = s_lo / 0.5;
    const double second = 0.2 * s_lo / ((2.0 * 0.5 + s_hi) * std::tan(0.4));
    CHECK(got == doctest::Approx(std::min(first, second)).epsilon(1e-14));
}

TEST_CASE("solvability threshold domain") {
    CHECK_THROWS_AS(epsilon_star(0.4, 0.2, 0.5), domain_error);
    CHECK_THROWS_AS(epsilon_star(0.0, 0.4, 0.5), domain_error);
    // a collapsed bracket is a legitimate degenerate query
    CHECK(epsilon_star(0.2, 0.2, 0.5) > 0.0);
    CHECK_THROWS_AS(epsilon_star(0.2, pi / 2.0, 0.5), domain_error);
    CHECK_THROWS_AS(epsilon_star(0.2, 0.4, 0.0), domain_error);
    CHECK_THROWS_AS(epsilon_star(0.2, 0.4, -1.0), domain_error);
}

// ---------------------------------------------------------------------------
// Hypersonic sweep
// ---------------------------------------------------------------------------

TEST_CASE("sweep down the ladder shrinks the layer at a constant rate") {
    const std::vector<double> ladder{0.08, 0.04, 0.02, 0.01};
    const sweep_result sweep = hypersonic_sweep(20.0 * deg, ladder, 1.0, {});
    REQUIRE(sweep.records.size() == 4);
    CHECK(sweep.warnings.empty());

    const double target = std::sin(20.0 * deg) * std::sin(20.0 * deg);
    double prev_gap = -1.0;
    double prev_perr = -1.0;
    for (const sweep_record& rec : sweep.records) {
        REQUIRE(rec.ok);
        CHECK(rec.error.empty());
        CHECK(rec.gap > 0.0);
        CHECK(rec.gap <= rec.gap_bound);
        CHECK(rec.wall_time_s > 0.0);
        // the bound is the advertised linear-in-eps expression
        const double sb = std::sin(rec.beta);
        const double expected_bound = rec.eps * (2.0 * 0.5 + sb * sb) *
                                      std::tan(rec.beta) /
                                      (2.0 * std::sin(20.0 * deg) *
                                       std::sin(20.0 * deg));
        CHECK(rec.gap_bound ==
              doctest::Approx(expected_bound).epsilon(1e-12));
        if (prev_gap > 0.0) {
            const double ratio = rec.gap / prev_gap;
            CHECK(ratio > 0.45);
            CHECK(ratio < 0.56);
        }
        const double perr = std::abs(rec.surface_pressure - target);
        if (prev_perr > 0.0) CHECK(perr < prev_perr);
        prev_gap = rec.gap;
        prev_perr = perr;
    }
}

TEST_CASE("a failing rung is isolated and reported") {
    const std::vector<double> ladder{0.08, 0.04, 1e-18};
    const sweep_result sweep = hypersonic_sweep(20.0 * deg, ladder, 1.0, {},
                                                1e-8, false);
    REQUIRE(sweep.records.size() == 3);
    CHECK(sweep.records[0].ok);
    CHECK(sweep.records[1].ok);
    CHECK(!sweep.records[2].ok);
    CHECK(!sweep.records[2].error.empty());
    // the healthy rungs carry their solutions
    CHECK(sweep.records[0].beta > sweep.records[1].beta);
}

TEST_CASE("strict sweep raises on a failing rung") {
    const std::vector<double> ladder{0.08, 1e-18};
    CHECK_THROWS_AS(hypersonic_sweep(20.0 * deg, ladder, 1.0, {}, 1e-8, true),
                    solver_error);
}

TEST_CASE("sweep ladder validation") {
    const std::vector<double> empty;
    const std::vector<double> ascending{0.01, 0.02};
    const std::vector<double> repeated{0.02, 0.02};
    const std::vector<double> negative{0.02, -0.01};
    CHECK_THROWS_AS(hypersonic_sweep(20.0 * deg, empty, 1.0, {}), domain_error);
    CHECK_THROWS_AS(hypersonic_sweep(20.0 * deg, ascending, 1.0, {}),
                    domain_error);
    CHECK_THROWS_AS(hypersonic_sweep(20.0 * deg, repeated, 1.0, {}),
                    domain_error);
    CHECK_THROWS_AS(hypersonic_sweep(20.0 * deg, negative, 1.0, {}),
                    domain_error);
}
