// Error taxonomy for the conical-shock solver. Every failure mode the library
// can signal gets its own type so callers (and the CLI exit-code mapping) can
// distinguish bad input, out-of-regime physics, and solver breakdown.
#ifndef CONICAL_SHOCK_ERRORS_HPP
#define CONICAL_SHOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conical_shock {

// Base for everything thrown by this library.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the documented domain of an operation (bad angle, eps <= 0, ...).
struct domain_error : solver_error {
    using solver_error::solver_error;
};

// A state that the gas model cannot represent (speed at or above the limit
// speed, nonpositive density, vanishing pressure).
struct non_physical_error : solver_error {
    using solver_error::solver_error;
};

// Shock angle whose upstream normal Mach number is below 1: no compressive jump.
struct subsonic_normal_error : solver_error {
    using solver_error::solver_error;
};

// Degenerate sonic case M0n == 1 (identity jump). Derived from
// subsonic_normal_error so a single catch rejects M0n <= 1, while the
// degenerate case stays distinguishable.
struct sonic_normal_error : subsonic_normal_error {
    using subsonic_normal_error::subsonic_normal_error;
};

// The ODE coefficient matrix degenerates: c^2 - u^2 fell to the floor.
struct sonic_singularity_error : solver_error {
    using solver_error::solver_error;
};

// The inverse integration ran past the polar-angle floor (or out of budget)
// with u still negative: no cone surface on this ray.
struct no_cone_found_error : solver_error {
    using solver_error::solver_error;
};

// A grid state left the invariant region (or broke monotonicity) beyond
// tolerance: integration bug or out-of-theory parameters.
struct invariant_region_exit_error : solver_error {
    using solver_error::solver_error;
};

// The direct problem's root search could not establish a sign change.
struct no_bracket_error : solver_error {
    using solver_error::solver_error;
};

// Chaplygin flow asked for a quantity outside its validity regime.
struct regime_error : solver_error {
    using solver_error::solver_error;
};

// A measure family was paired with a test function of the wrong kind.
struct kind_mismatch_error : solver_error {
    using solver_error::solver_error;
};

}  // namespace conical_shock

#endif
