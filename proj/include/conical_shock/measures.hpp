// Radon-measure view of the shock layer: the measure families carried by a
// solved field on the sphere, their hypersonic limit (background flow plus a
// Dirac line on the cone circle), and the vague-convergence report that pairs
// both against a test-function suite along an eps ladder.
#ifndef CONICAL_SHOCK_MEASURES_HPP
#define CONICAL_SHOCK_MEASURES_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conical_shock/taylor_maccoll.hpp"

namespace conical_shock {

// The ten families. Flux families pair with tangential test fields (the
// momentum-flux one as a tensor), the rest with scalar test functions.
// Densities on the shock layer / upstream region:
//   mass_flux                 rho u          (vector, along the theta direction)
//   mass_source               rho w          (scalar)
//   energy_flux               rho u E0       (vector)
//   energy_source             rho w E0       (scalar)
//   radial_momentum_flux      rho u w        (vector)
//   radial_momentum_source    rho w^2        (scalar)
//   tangential_momentum_flux  rho u (x) u    (tensor)
//   tangential_kinetic        rho |u|^2      (scalar)
//   mass                      rho            (scalar)
//   pressure_field            p              (scalar)
enum class measure_family {
    mass_flux,
    mass_source,
    energy_flux,
    energy_source,
    radial_momentum_flux,
    radial_momentum_source,
    tangential_momentum_flux,
    tangential_kinetic,
    mass,
    pressure_field,
};

// True for the families that pair with a tangential test field.
bool is_field_family(measure_family f);

// Stable short name for output tables.
std::string family_name(measure_family f);

// Test function on the sphere. Scalar kind pairs with scalar families; the
// tangential_field kind is a profile psi for psi * d_theta (and
// psi * d_theta (x) d_theta against the tensor family). When axisymmetric is
// set the phi integration is the exact 2*pi factor; otherwise phi is
// integrated numerically.
struct test_function {
    enum class kind_t { scalar, tangential_field };
    enum class smoothness_t { c0, c1 };

    std::string name;
    kind_t kind = kind_t::scalar;
    smoothness_t smoothness = smoothness_t::c1;
    bool axisymmetric = true;
    std::function<double(double theta, double phi)> evaluate;
};

// The same profile viewed as a tangential test field.
test_function as_tangential_field(const test_function& psi);

// Default suite: 1, cos(theta), sin^2(theta), cos(phi) sin(theta) (to probe
// axial symmetry of the pairings), and a compactly supported C^1 bump centered
// on the cone angle.
std::vector<test_function> default_test_suite(double theta0,
                                              double bump_width = 0.4);

// Hypersonic-limit solution at cone angle theta0: the upstream background on
// the sphere plus a Dirac line on the cone circle with these weights.
struct radon_cone_solution {
    double theta0 = 0.0;
    double E0 = 0.0;
    double mass_weight = 0.0;             // (1/2) tan(theta0)
    double mass_source_weight = 0.0;      // (1/2) sin(theta0)
    double energy_source_weight = 0.0;    // (1/2) sin(theta0) E0
    double momentum_source_weight = 0.0;  // (1/2) sin(theta0) cos(theta0)
    double surface_pressure = 0.0;        // Newtonian law sin^2(theta0)
};

// Requires theta0 in (0, pi/2) and E0 > 1/2.
radon_cone_solution limit_solution(double theta0, double E0);

// Total radial mass flux carried by the layer, 2*pi Int rho w sin(theta)
// d(theta) over [theta_cone, beta]. Equals pi sin^2(beta) exactly for a field
// that satisfies the ODE (the integrand is a perfect derivative).
double mass_flux(const conical_field& field);

// Pairing of one family of the eps-level solution (upstream background plus
// the solved layer) against a test function. Throws kind_mismatch_error if the
// family and the test function kind disagree.
double pair_measure(const conical_field& field, measure_family f,
                    const test_function& psi);

// Pairing of one family of the limit solution: background over the whole
// exterior sphere plus the Dirac line with the family's weight. The pressure
// family pairs to exactly 0.
double pair_measure(const radon_cone_solution& sol, measure_family f,
                    const test_function& psi);

// One rung of a convergence series.
struct convergence_entry {
    double eps = 0.0;
    bool ok = false;
    std::string error;          // nonempty iff !ok
    double pairing_eps = 0.0;
    double pairing_limit = 0.0;
    double gap = 0.0;           // |pairing_eps - pairing_limit|
    double relative_gap = 0.0;  // gap over max(|pairing_limit|, mass scale of |psi|)
};

// All rungs for one (family, psi) pair.
struct convergence_series {
    measure_family family{};
    std::string psi_name;
    std::vector<convergence_entry> entries;
    bool gaps_decreasing = false;  // with 5% slack; roundoff-level gaps skipped
};

// Per-eps check of the tangential-to-radial velocity ratio against its
// a-priori bound tan(beta) (2 E0 / sin^2(beta) + 1) eps / (eps + 2).
struct velocity_ratio_check {
    double eps = 0.0;
    double sup_ratio = 0.0;  // max |u/w| over the layer grid
    double bound = 0.0;
    bool ok = false;
};

struct convergence_report_t {
    double theta0 = 0.0;
    double E0 = 0.0;
    std::vector<convergence_series> series;
    std::vector<velocity_ratio_check> ratio_checks;
};

// Solves the direct problem at each eps of a descending ladder and pairs every
// family against every suite entry (scalar profiles are promoted to tangential
// fields for the flux families). Per-eps solver failures are recorded in the
// affected entries, not thrown.
convergence_report_t convergence_report(double theta0,
                                        std::span<const double> eps_list,
                                        std::span<const test_function> suite,
                                        double E0,
                                        const integrator_options& opts = {},
                                        double angle_tol = 1e-8);

}  // namespace conical_shock

#endif
