// Python bindings for the conical-shock solver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conical_shock/direct.hpp"
#include "conical_shock/io.hpp"
#include "conical_shock/measures.hpp"
#include "conical_shock/oracle.hpp"

namespace py = pybind11;
using namespace conical_shock;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Supersonic conical flow: attached shocks, the hypersonic limit, "
              "and measure convergence";

    py::register_exception<domain_error>(m, "DomainError",
                                         PyExc_ValueError);
    py::register_exception<non_physical_error>(m, "NonPhysicalError");
    py::register_exception<subsonic_normal_error>(m, "SubsonicNormalError");
    py::register_exception<sonic_singularity_error>(m, "SonicSingularityError");
    py::register_exception<no_cone_found_error>(m, "NoConeFoundError");
    py::register_exception<invariant_region_exit_error>(
        m, "InvariantRegionExitError");
    py::register_exception<no_bracket_error>(m, "NoBracketError");
    py::register_exception<regime_error>(m, "RegimeError");
    py::register_exception<kind_mismatch_error>(m, "KindMismatchError");

    py::class_<gas_parameters>(m, "GasParameters")
        .def_readonly("eps", &gas_parameters::eps)
        .def_readonly("gamma", &gas_parameters::gamma)
        .def_readonly("E0", &gas_parameters::E0)
        .def_readonly("Eprime", &gas_parameters::Eprime)
        .def_readonly("p0", &gas_parameters::p0)
        .def_readonly("M0", &gas_parameters::M0);

    py::class_<flow_state>(m, "FlowState")
        .def_readonly("theta", &flow_state::theta)
        .def_readonly("rho", &flow_state::rho)
        .def_readonly("u", &flow_state::u)
        .def_readonly("w", &flow_state::w)
        .def_readonly("p", &flow_state::p)
        .def_readonly("c", &flow_state::c)
        .def_readonly("Mn", &flow_state::Mn)
        .def_readonly("q_out", &flow_state::q_out);

    py::class_<post_shock_state>(m, "PostShockState")
        .def_readonly("beta", &post_shock_state::beta)
        .def_readonly("state", &post_shock_state::state)
        .def_readonly("M0n", &post_shock_state::M0n)
        .def_readonly("Mn_sq", &post_shock_state::Mn_sq);

    py::class_<field_diagnostics>(m, "FieldDiagnostics")
        .def_readonly("entropy_drift", &field_diagnostics::entropy_drift)
        .def_readonly("min_det", &field_diagnostics::min_det)
        .def_readonly("u_at_event", &field_diagnostics::u_at_event)
        .def_readonly("steps_accepted", &field_diagnostics::steps_accepted)
        .def_readonly("steps_rejected", &field_diagnostics::steps_rejected);

    py::class_<conical_field>(m, "ConicalField")
        .def_readonly("beta", &conical_field::beta)
        .def_readonly("theta_cone", &conical_field::theta_cone)
        .def_readonly("surface_pressure", &conical_field::surface_pressure)
        .def_readonly("grid", &conical_field::grid)
        .def_readonly("diagnostics", &conical_field::diagnostics);

    py::class_<direct_solution>(m, "DirectSolution")
        .def_readonly("theta0", &direct_solution::theta0)
        .def_readonly("beta", &direct_solution::beta)
        .def_readonly("residual", &direct_solution::residual)
        .def_readonly("iterations", &direct_solution::iterations)
        .def_readonly("field", &direct_solution::field);

    py::class_<integrator_options>(m, "IntegratorOptions")
        .def(py::init<>())
        .def_readwrite("rel_tol", &integrator_options::rel_tol)
        .def_readwrite("abs_tol", &integrator_options::abs_tol)
        .def_readwrite("max_step", &integrator_options::max_step)
        .def_readwrite("u_tol", &integrator_options::u_tol)
        .def_readwrite("theta_floor", &integrator_options::theta_floor)
        .def_readwrite("max_steps", &integrator_options::max_steps);

    py::class_<radon_cone_solution>(m, "RadonConeSolution")
        .def_readonly("theta0", &radon_cone_solution::theta0)
        .def_readonly("E0", &radon_cone_solution::E0)
        .def_readonly("mass_weight", &radon_cone_solution::mass_weight)
        .def_readonly("mass_source_weight",
                      &radon_cone_solution::mass_source_weight)
        .def_readonly("energy_source_weight",
                      &radon_cone_solution::energy_source_weight)
        .def_readonly("momentum_source_weight",
                      &radon_cone_solution::momentum_source_weight)
        .def_readonly("surface_pressure",
                      &radon_cone_solution::surface_pressure);

    m.def("derive_parameters", &derive_parameters, py::arg("eps"),
          py::arg("E0"),
          "Validate (eps, E0) and derive p0, M0 and friends");
    m.def("pressure", &pressure, py::arg("rho"), py::arg("speed_sq"),
          py::arg("params"), "State-law pressure");
    m.def(
        "entropy_invariant",
        [](const flow_state& s, const gas_parameters& gp) {
            return entropy_invariant(s, gp);
        },
        py::arg("state"), py::arg("params"), "p / rho^(1+eps)");
    m.def("shock_jump", &shock_jump, py::arg("beta"), py::arg("params"),
          "Entropy-admissible jump state at shock angle beta");
    m.def(
        "verify_rankine_hugoniot",
        [](const post_shock_state& ps, const gas_parameters& gp) {
            const auto r = verify_rankine_hugoniot(ps, gp);
            return py::make_tuple(r.residual, r.entropy_ok);
        },
        py::arg("post_shock"), py::arg("params"),
        "Jump-balance residuals and the compressive check");
    m.def(
        "conical_rhs",
        [](double theta, double rho, double u, double w,
           const gas_parameters& gp) {
            return conical_rhs(theta, rho, u, w, gp);
        },
        py::arg("theta"), py::arg("rho"), py::arg("u"), py::arg("w"),
        py::arg("params"), "Right-hand side (rho', u', w') of the field ODE");
    m.def("integrate_inverse", &integrate_inverse, py::arg("beta"),
          py::arg("params"), py::arg("options") = integrator_options{},
          "March the layer from the shock down to the cone surface");
    m.def("cone_angle_map", &cone_angle_map, py::arg("beta"), py::arg("params"),
          py::arg("options") = integrator_options{},
          "Cone angle produced by the shock angle beta");
    m.def("solve_direct", &solve_direct, py::arg("theta0"), py::arg("params"),
          py::arg("options") = integrator_options{},
          py::arg("angle_tol") = 1e-8,
          "Find the attached shock angle for a given cone half-angle");
    m.def("epsilon_star", &epsilon_star, py::arg("beta_lo"), py::arg("beta_hi"),
          py::arg("Eprime"), "Small-eps solvability threshold");
    m.def(
        "hypersonic_sweep",
        [](double theta0, const std::vector<double>& eps_list, double E0,
           const integrator_options& opts, double angle_tol, bool strict) {
            const sweep_result sw =
                hypersonic_sweep(theta0, eps_list, E0, opts, angle_tol, strict);
            py::list records;
            for (const auto& r : sw.records) {
                py::dict d;
                d["eps"] = r.eps;
                d["ok"] = r.ok;
                d["error"] = r.error;
                d["beta"] = r.beta;
                d["gap"] = r.gap;
                d["gap_bound"] = r.gap_bound;
                d["surface_pressure"] = r.surface_pressure;
                records.append(d);
            }
            return records;
        },
        py::arg("theta0"), py::arg("eps_list"), py::arg("E0") = 1.0,
        py::arg("options") = integrator_options{}, py::arg("angle_tol") = 1e-8,
        py::arg("strict") = false,
        "Direct solves along a descending eps ladder");
    m.def("limit_solution", &limit_solution, py::arg("theta0"), py::arg("E0"),
          "Hypersonic-limit solution: background plus cone Dirac line");
    m.def("mass_flux", &mass_flux, py::arg("field"),
          "Radial mass flux carried by the layer");
    m.def("chaplygin_shock_angle", &chaplygin_shock_angle, py::arg("M0"),
          "Chaplygin attached-discontinuity angle");
    m.def(
        "chaplygin_surface_pressure",
        [](double theta0, double M0, double rho0) {
            chaplygin_parameters cp;
            cp.M0 = M0;
            cp.rho0 = rho0;
            return chaplygin_surface_pressure(theta0, cp);
        },
        py::arg("theta0"), py::arg("M0"), py::arg("rho0") = 1.0,
        "Chaplygin surface pressure coefficient");
    m.def(
        "rk4_cone_angle",
        [](double beta, const gas_parameters& gp, double h) {
            return rk4_cone_angle(beta, gp, h).theta_cone;
        },
        py::arg("beta"), py::arg("params"), py::arg("h") = 1e-6,
        "Fixed-step check integration of the cone angle");
}
