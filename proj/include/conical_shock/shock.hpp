// Rankine-Hugoniot jump across a conical shock at polar angle beta, plus the
// closed-form Chaplygin-gas results (shock angle independent of the cone,
// surface pressure coefficient of the concentration solution).
#ifndef CONICAL_SHOCK_SHOCK_HPP
#define CONICAL_SHOCK_SHOCK_HPP

#include <array>

#include "conical_shock/gas.hpp"

namespace conical_shock {

// Downstream state immediately behind a conical shock at theta = beta.
struct post_shock_state {
    double beta;
    flow_state state;   // at theta = beta; state.p comes from the state law
    double M0n;         // upstream normal Mach number M0 sin(beta)
    double Mn_sq;       // downstream tangential Mach^2 from the jump relations
};

// Jump relations without the entropy gate; requires only beta in (0, pi/2]
// and M0n > 0. At M0n = 1 this returns the identity jump. Backs the
// verification tests; most callers want shock_jump.
post_shock_state evaluate_jump(double beta, const gas_parameters& gp);

// Entropy-admissible compressive jump: evaluate_jump plus the gate M0n > 1.
// Throws sonic_normal_error at M0n == 1 and subsonic_normal_error below.
post_shock_state shock_jump(double beta, const gas_parameters& gp);

// Residuals of the five jump balances, in order: mass, energy, radial
// momentum, tangential momentum flux (rho u^2 + p), azimuthal identity.
// All are differences of upstream and downstream fluxes at beta, so a clean
// closed-form state drives every entry to roundoff.
struct rankine_hugoniot_residuals {
    std::array<double, 5> residual;
    bool entropy_ok;  // compressive check p(beta) > p0
    double max_abs() const;
};

rankine_hugoniot_residuals verify_rankine_hugoniot(const post_shock_state& ps,
                                                   const gas_parameters& gp);

// Chaplygin gas p = A - B/rho with upstream density rho0 and Mach number
// M0 = rho0 |V| / sqrt(B) (unit upstream speed). A does not enter any of the
// quantities computed here but is kept for completeness.
struct chaplygin_parameters {
    double A = 1.0;
    double B = 1.0;
    double rho0 = 1.0;
    double M0 = 2.0;
};

// Attached-discontinuity angle beta0 = arctan(1/sqrt(M0^2 - 1)); independent
// of the cone angle. Requires M0 > 1, else domain_error.
double chaplygin_shock_angle(double M0);

// Surface pressure coefficient of the concentration solution,
//   W_C = sin^2(theta0) - 1/(rho0 M0^2),
// valid when M0 sin(theta0) >= 1 (a hair of slack absorbs roundoff at the
// boundary). Throws regime_error below the regime, domain_error on bad input.
double chaplygin_surface_pressure(double theta0, const chaplygin_parameters& cp);

}  // namespace conical_shock

#endif
