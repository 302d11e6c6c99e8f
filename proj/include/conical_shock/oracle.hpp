// Fixed-step classical RK4 march of the inverse problem. Deliberately naive
// and kept apart from the adaptive integrator so the two paths share nothing
// but the right-hand side; the adaptive result is cross-checked against this
// in tests and behind the CLI's --seed-oracle flag.
#ifndef CONICAL_SHOCK_ORACLE_HPP
#define CONICAL_SHOCK_ORACLE_HPP

#include "conical_shock/shock.hpp"

namespace conical_shock {

// How the u = 0 crossing between two fixed-step nodes is resolved.
// linear_interp is the plain cross-check mode; secant_refine re-steps from the
// last pre-crossing node with shrinking partial steps, which keeps the
// crossing error at the integrator's own order for convergence studies.
enum class crossing_mode { linear_interp, secant_refine };

struct oracle_result {
    double theta_cone = 0.0;
    double u_before = 0.0;  // u at the last node before the crossing
    long steps = 0;
};

// Marches from the jump state at beta with fixed step h (> 0, in radians)
// until u changes sign, then resolves the crossing per mode. Throws
// shock_jump's errors at beta and no_cone_found_error if theta_floor is
// reached first.
oracle_result rk4_cone_angle(double beta, const gas_parameters& gp, double h,
                             crossing_mode mode = crossing_mode::linear_interp,
                             double theta_floor = 1e-4);

}  // namespace conical_shock

#endif
