// Taylor-Maccoll conical field: the explicit ODE for (rho, u, w) in the polar
// angle and the inverse problem (fix the shock at beta, march down in theta
// until the tangential velocity vanishes; that angle is the cone surface).
#ifndef CONICAL_SHOCK_TAYLOR_MACCOLL_HPP
#define CONICAL_SHOCK_TAYLOR_MACCOLL_HPP

#include <array>
#include <string>
#include <vector>

#include "conical_shock/shock.hpp"

namespace conical_shock {

struct integrator_options {
    double rel_tol = 1e-10;       // per-step relative error control
    double abs_tol = 1e-12;       // per-step absolute error control
    double max_step = 2e-3;       // step-size cap in radians; keeps the output
                                  // grid dense enough for cubic reconstruction
    double u_tol = 1e-12;         // event tolerance on |u| at the cone surface
    double det_floor_frac = 1e-12;  // sonic floor as a fraction of c^2 at beta
    double theta_floor = 1e-4;    // give up below this polar angle
    int max_steps = 100000;
};

// Bookkeeping from one inverse integration.
struct field_diagnostics {
    double entropy_drift = 0.0;   // max relative drift of p / rho^(1+eps)
    double min_det = 0.0;         // min of c^2 - u^2 over accepted states
    double u_at_event = 0.0;      // |u| at the refined crossing, pre-snap
    int steps_accepted = 0;
    int steps_rejected = 0;
};

// A solved shock layer: states from the shock at beta down to the cone
// surface at theta_cone, in decreasing theta. The last grid point has its
// tangential velocity snapped to exactly 0 (the pre-snap residual is kept in
// diagnostics.u_at_event).
struct conical_field {
    gas_parameters params;
    double beta = 0.0;
    double theta_cone = 0.0;
    double surface_pressure = 0.0;  // p at the cone surface
    std::vector<flow_state> grid;   // grid.front().theta == beta
    field_diagnostics diagnostics;
};

// Right-hand side of the explicit system at (theta, rho, u, w):
//   rho' = rho u (u cot(theta) + w) / (c^2 - u^2)
//   u'   = (u^2 w - c^2 u cot(theta) - 2 c^2 w) / (c^2 - u^2)
//   w'   = u
// Returns (rho', u', w'). Throws sonic_singularity_error when c^2 - u^2 falls
// to det_floor, non_physical_error on states the gas model rejects.
std::array<double, 3> conical_rhs(double theta, double rho, double u, double w,
                                  const gas_parameters& gp,
                                  double det_floor = 0.0);

// Integrates the field from the shock at beta down to the u = 0 crossing with
// an adaptive embedded Runge-Kutta pair; the crossing is refined on the dense
// output to opts.u_tol. Invariant-region and a-priori-gap checks run on every
// accepted state. Throws shock_jump's errors at beta, sonic_singularity_error,
// invariant_region_exit_error, or no_cone_found_error.
conical_field integrate_inverse(double beta, const gas_parameters& gp,
                                const integrator_options& opts = {});

// One monotonicity defect found on a grid.
struct monotonicity_violation {
    std::string quantity;  // "rho", "u", "w", "c", "Mn", "q_out"
    std::size_t index;     // grid index (decreasing-theta order) where it occurs
    double magnitude;      // how far past tolerance the comparison failed
};

struct monotonicity_report_t {
    std::vector<monotonicity_violation> violations;
    bool clean() const { return violations.empty(); }
};

// Checks the field's ordering properties between adjacent grid points:
// rho, u, w, c and the outward normal speed q_out all grow from the shock
// toward the cone (u from its negative jump value up to 0), q_out stays
// positive throughout, and the tangential Mach number Mn shrinks toward the
// cone. A single-point grid reports clean vacuously.
monotonicity_report_t monotonicity_report(const conical_field& field,
                                          double tol = 1e-11);

}  // namespace conical_shock

#endif
