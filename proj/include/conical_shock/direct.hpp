// Direct problem: given the cone half-angle, find the attached shock angle by
// root-finding on the inverse map, plus the small-eps solvability threshold
// and the hypersonic sweep toward the Newtonian pressure law.
#ifndef CONICAL_SHOCK_DIRECT_HPP
#define CONICAL_SHOCK_DIRECT_HPP

#include <span>
#include <string>
#include <vector>

#include "conical_shock/taylor_maccoll.hpp"

namespace conical_shock {

// Cone angle reached by the inverse integration started at beta; the map the
// direct problem inverts. Strictly below beta. Propagates integrate_inverse's
// errors.
double cone_angle_map(double beta, const gas_parameters& gp,
                      const integrator_options& opts = {});

struct direct_solution {
    double theta0 = 0.0;
    double beta = 0.0;
    double residual = 0.0;   // |cone_angle_map(beta) - theta0|, < angle_tol
    int iterations = 0;      // cone_angle_map evaluations spent
    conical_field field;     // re-integrated at the accepted beta
};

// Solves cone_angle_map(beta) = theta0 by bisection on a discovered bracket.
// The lower end starts just above theta0 (where the map undershoots) and the
// upper end is expanded toward pi/2 until the map overshoots; brackets are
// discovered, never assumed. Throws domain_error for theta0 outside (0, pi/2),
// no_bracket_error when no sign change exists (subsonic upstream, eps too
// large, ...). The a-priori gap bound is asserted on the result.
direct_solution solve_direct(double theta0, const gas_parameters& gp,
                             const integrator_options& opts = {},
                             double angle_tol = 1e-8);

// Small-eps solvability threshold for shock angles in [beta_lo, beta_hi]:
//   eps_star = min( sin^2(beta_lo)/Eprime,
//                   beta_lo sin^2(beta_lo) / ((2 Eprime + sin^2(beta_hi)) tan(beta_hi)) ).
// Requires 0 < beta_lo <= beta_hi < pi/2 and Eprime > 0.
double epsilon_star(double beta_lo, double beta_hi, double Eprime);

struct sweep_record {
    double eps = 0.0;
    bool ok = false;
    std::string error;          // nonempty iff !ok
    double beta = 0.0;
    double gap = 0.0;           // beta - theta0, radians
    double gap_bound = 0.0;     // a-priori bound eps (2 Eprime + sin^2 beta) tan(beta) / (2 sin^2 theta0)
    double surface_pressure = 0.0;
    double wall_time_s = 0.0;
};

struct sweep_result {
    double theta0 = 0.0;
    double E0 = 0.0;
    std::vector<sweep_record> records;      // one per requested eps, in order
    std::vector<std::string> warnings;      // soft-check misses (gap ratios, pressure trend)
};

// Runs solve_direct across a strictly descending ladder of eps values at fixed
// cone angle. Per-eps solver failures are recorded, not thrown. Hard
// postcondition per successful record: gap <= gap_bound. Soft checks (gaps
// shrink along the ladder with a 5% slack, surface pressure approaches
// sin^2 theta0) throw invariant_region_exit_error by default; strict = false
// downgrades them to entries in warnings.
sweep_result hypersonic_sweep(double theta0, std::span<const double> eps_list,
                              double E0, const integrator_options& opts = {},
                              double angle_tol = 1e-8, bool strict = true);

}  // namespace conical_shock

#endif
