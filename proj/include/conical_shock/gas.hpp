// Polytropic gas model in the hypersonic normalization: upstream density and
// speed are 1, eps = gamma - 1 is the small parameter, and the upstream
// pressure / Mach number follow from the Bernoulli constant E0 alone.
#ifndef CONICAL_SHOCK_GAS_HPP
#define CONICAL_SHOCK_GAS_HPP

#include "conical_shock/errors.hpp"

namespace conical_shock {

// Fixed parameters of one flow problem. Built by derive_parameters; treat as
// immutable after construction.
struct gas_parameters {
    double eps;      // gamma - 1, in (0, inf)
    double gamma;    // adiabatic exponent, 1 + eps
    double E0;       // Bernoulli constant, > 1/2
    double Eprime;   // E0 - 1/2 (upstream enthalpy head)
    double p0;       // upstream pressure (eps/(eps+1)) * Eprime
    double M0;       // upstream Mach number, 1/sqrt(eps * Eprime)
};

// Meridional flow state on the unit sphere at polar angle theta. u is the
// tangential (theta-direction) velocity, w the radial one; p, c, Mn, q_out are
// derived from (rho, u, w) through the state law and cached for reporting.
struct flow_state {
    double theta;
    double rho;
    double u;
    double w;
    double p;      // pressure from the state law at (rho, u^2 + w^2)
    double c;      // sound speed sqrt(gamma p / rho)
    double Mn;     // tangential Mach number |u| / c
    double q_out;  // outward normal speed w sin(theta) + u cos(theta)
};

// Validates eps > 0, E0 > 1/2 and derives the dependent constants.
// Throws domain_error otherwise.
gas_parameters derive_parameters(double eps, double E0);

// Pressure from the Bernoulli-reduced state law,
//   p = (eps/(eps+1)) rho (E0 - speed_sq/2).
// Throws non_physical_error if rho <= 0, speed_sq >= 2 E0, or the result
// underflows below 1e-300 (no clamping).
double pressure(double rho, double speed_sq, const gas_parameters& gp);

// Squared sound speed c^2 = gamma p / rho = eps (E0 - speed_sq/2).
// Same preconditions as pressure().
double sound_speed_sq(double rho, double speed_sq, const gas_parameters& gp);

// Builds a flow_state with the derived fields filled in.
flow_state make_flow_state(double theta, double rho, double u, double w,
                           const gas_parameters& gp);

// The specific-entropy invariant p / rho^(1+eps); constant across the smooth
// field, and the quantity whose drift diagnoses integration error.
double entropy_invariant(const flow_state& s, const gas_parameters& gp);

}  // namespace conical_shock

#endif
