#include "conical_shock/shock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace conical_shock {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

}  // namespace

post_shock_state evaluate_jump(double beta, const gas_parameters& gp) {
    if (!(beta > 0.0) || !(beta <= half_pi))
        throw domain_error("evaluate_jump: beta must lie in (0, pi/2], got " +
                           std::to_string(beta));
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    const double M0n = gp.M0 * sb;
    if (!(M0n > 0.0))
        throw domain_error("evaluate_jump: upstream normal Mach is not positive");
    const double m2 = M0n * M0n;

    // Compressive jump in the normalized variables: density and tangential
    // velocity from the normal-shock relations, radial velocity continuous,
    // Bernoulli constant preserved.
    const double rho = (gp.eps + 2.0) * m2 / (2.0 + gp.eps * m2);
    const double u = -((2.0 + gp.eps * m2) / ((gp.eps + 2.0) * m2)) * sb;
    const double w = cb;

    post_shock_state ps;
    ps.beta = beta;
    ps.M0n = M0n;
    ps.Mn_sq = (m2 + 2.0 / gp.eps) /
               (2.0 * (gp.eps + 1.0) / gp.eps * m2 - 1.0);
    ps.state = make_flow_state(beta, rho, u, w, gp);
    return ps;
}

post_shock_state shock_jump(double beta, const gas_parameters& gp) {
    if (!(beta > 0.0) || !(beta <= half_pi))
        throw domain_error("shock_jump: beta must lie in (0, pi/2], got " +
                           std::to_string(beta));
    // Gate on the normal Mach number before deriving the state: a deeply
    // subsonic normal component drives the jump formulas past the limit speed
    // and the pressure would throw first with a misleading message.
    const double M0n = gp.M0 * std::sin(beta);
    if (M0n == 1.0)
        throw sonic_normal_error(
            "shock_jump: sonic normal Mach at beta = " + std::to_string(beta) +
            ", the jump degenerates to the identity");
    if (M0n < 1.0)
        throw subsonic_normal_error(
            "shock_jump: subsonic normal Mach " + std::to_string(M0n) +
            " at beta = " + std::to_string(beta) + ", no compressive shock");
    return evaluate_jump(beta, gp);
}

rankine_hugoniot_residuals verify_rankine_hugoniot(const post_shock_state& ps,
                                                   const gas_parameters& gp) {
    const double sb = std::sin(ps.beta);
    const double cb = std::cos(ps.beta);
    const flow_state& d = ps.state;

    // Upstream state on the shock sphere: unit density, tangential velocity
    // -sin(beta), radial velocity cos(beta), pressure p0, azimuthal velocity 0.
    const double up_mass = -sb;                 // rho0 u0
    const double dn_mass = d.rho * d.u;

    rankine_hugoniot_residuals r;
    r.residual[0] = up_mass - dn_mass;
    r.residual[1] = up_mass * gp.E0 - dn_mass * gp.E0;
    r.residual[2] = up_mass * cb - dn_mass * d.w;
    r.residual[3] = (sb * sb + gp.p0) - (d.rho * d.u * d.u + d.p);
    r.residual[4] = up_mass * 0.0 - dn_mass * 0.0;
    r.entropy_ok = d.p > gp.p0;
    return r;
}

double rankine_hugoniot_residuals::max_abs() const {
    double m = 0.0;
    for (double v : residual) m = std::max(m, std::abs(v));
    return m;
}

// ---------------------------------------------------------------------------
// Chaplygin gas
// ---------------------------------------------------------------------------

double chaplygin_shock_angle(double M0) {
    if (!(M0 > 1.0) || !std::isfinite(M0))
        throw domain_error(
            "chaplygin_shock_angle: needs supersonic M0 > 1, got " +
            std::to_string(M0));
    return std::atan(1.0 / std::sqrt(M0 * M0 - 1.0));
}

double chaplygin_surface_pressure(double theta0, const chaplygin_parameters& cp) {
    if (!(theta0 > 0.0) || !(theta0 < half_pi))
        throw domain_error(
            "chaplygin_surface_pressure: theta0 must lie in (0, pi/2), got " +
            std::to_string(theta0));
    if (!(cp.A > 0.0) || !(cp.B > 0.0) || !(cp.rho0 > 0.0) || !(cp.M0 > 0.0))
        throw domain_error(
            "chaplygin_surface_pressure: A, B, rho0, M0 must all be positive");
    const double st = std::sin(theta0);
    // Concentration regime M0 sin(theta0) >= 1; the 1e-12 slack keeps the
    // exact boundary (which rounds to just under 1) inside.
    if (cp.M0 * st < 1.0 - 1e-12)
        throw regime_error(
            "chaplygin_surface_pressure: M0 sin(theta0) = " +
            std::to_string(cp.M0 * st) +
            " < 1, the concentration solution does not reach this cone");
    return st * st - 1.0 / (cp.rho0 * cp.M0 * cp.M0);
}

}  // namespace conical_shock
