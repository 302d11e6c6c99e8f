#include "conical_shock/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "conical_shock/direct.hpp"

namespace conical_shock {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double half_pi = std::numbers::pi / 2.0;

// ---------------------------------------------------------------------------
// Quadrature helpers
// ---------------------------------------------------------------------------

// 8-point Gauss-Legendre on [-1, 1].
constexpr double gl8_x[4] = {0.1834346424956498, 0.5255324099163290,
                             0.7966664774136267, 0.9602898564975363};
constexpr double gl8_w[4] = {0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};

template <class F>
double gl8(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        sum += gl8_w[i] *
               (f(mid - rad * gl8_x[i]) + f(mid + rad * gl8_x[i]));
    }
    return sum * rad;
}

// Gauss-Kronrod 15(7) node pair for the adaptive background integrals.
constexpr double gk15_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double gk15_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double gk15_wg[4] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469};

template <class F>
void gk15(F&& f, double a, double b, double& kronrod, double& err) {
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    double rk = 0.0, rg = 0.0;
    const double fc = f(mid);
    rk += gk15_wk[7] * fc;
    rg += gk15_wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double v =
            f(mid - rad * gk15_x[i]) + f(mid + rad * gk15_x[i]);
        rk += gk15_wk[i] * v;
        if (i % 2 == 1) rg += gk15_wg[i / 2] * v;
    }
    kronrod = rk * rad;
    err = std::abs((rk - rg) * rad);
}

template <class F>
double adaptive_quad(F&& f, double a, double b, double tol, int depth = 0) {
    double val, err;
    gk15(f, a, b, val, err);
    if (err <= tol * std::max(1.0, std::abs(val)) || depth >= 28) return val;
    const double mid = 0.5 * (a + b);
    return adaptive_quad(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive_quad(f, mid, b, 0.5 * tol, depth + 1);
}

// ---------------------------------------------------------------------------
// Test functions
// ---------------------------------------------------------------------------

// Integral of psi over one azimuthal circle. Axisymmetric test functions get
// the exact 2*pi factor; the rest are integrated with panels of Gauss nodes
// (smooth integrands on a circle, so this converges far below the tolerances
// used anywhere in this module).
double phi_integral(const test_function& psi, double theta) {
    if (psi.axisymmetric) return two_pi * psi.evaluate(theta, 0.0);
    double sum = 0.0;
    const int panels = 8;
    for (int p = 0; p < panels; ++p) {
        const double a = two_pi * p / panels;
        const double b = two_pi * (p + 1) / panels;
        sum += gl8([&](double phi) { return psi.evaluate(theta, phi); }, a, b);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Family densities
// ---------------------------------------------------------------------------

// Density of a family in the upstream flow (rho = 1, u = -sin, w = cos).
// The pressure family takes the upstream pressure as a parameter so the limit
// solution (pressure -> 0) and the eps-level one (pressure p0) share the code.
double upstream_density(measure_family f, double theta, double E0, double p0) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    switch (f) {
        case measure_family::mass_flux: return -st;
        case measure_family::mass_source: return ct;
        case measure_family::energy_flux: return -st * E0;
        case measure_family::energy_source: return ct * E0;
        case measure_family::radial_momentum_flux: return -st * ct;
        case measure_family::radial_momentum_source: return ct * ct;
        case measure_family::tangential_momentum_flux: return st * st;
        case measure_family::tangential_kinetic: return st * st;
        case measure_family::mass: return 1.0;
        case measure_family::pressure_field: return p0;
    }
    throw domain_error("upstream_density: unknown family");
}

double layer_density(measure_family f, double rho, double u, double w,
                     double p, double E0) {
    switch (f) {
        case measure_family::mass_flux: return rho * u;
        case measure_family::mass_source: return rho * w;
        case measure_family::energy_flux: return rho * u * E0;
        case measure_family::energy_source: return rho * w * E0;
        case measure_family::radial_momentum_flux: return rho * u * w;
        case measure_family::radial_momentum_source: return rho * w * w;
        case measure_family::tangential_momentum_flux: return rho * u * u;
        case measure_family::tangential_kinetic: return rho * u * u;
        case measure_family::mass: return rho;
        case measure_family::pressure_field: return p;
    }
    throw domain_error("layer_density: unknown family");
}

// Dirac-line weight of a family in the limit solution; zero for the families
// whose layer density vanishes as the layer collapses.
double dirac_weight(measure_family f, const radon_cone_solution& sol) {
    switch (f) {
        case measure_family::mass: return sol.mass_weight;
        case measure_family::mass_source: return sol.mass_source_weight;
        case measure_family::energy_source: return sol.energy_source_weight;
        case measure_family::radial_momentum_source:
            return sol.momentum_source_weight;
        default: return 0.0;
    }
}

void check_kind(measure_family f, const test_function& psi,
                const char* caller) {
    const bool want_field = is_field_family(f);
    const bool got_field = psi.kind == test_function::kind_t::tangential_field;
    if (want_field != got_field)
        throw kind_mismatch_error(
            std::string(caller) + ": family " + family_name(f) +
            (want_field ? " pairs with a tangential test field, got scalar \""
                        : " pairs with a scalar test function, got field \"") +
            psi.name + "\"");
}

// ---------------------------------------------------------------------------
// Layer quadrature
// ---------------------------------------------------------------------------

// Integrates g(state, theta) * sin(theta) * phi_weight over the solved layer.
// Each grid segment is reconstructed with cubic Hermite interpolation of
// (rho, u, w) (endpoint derivatives from the ODE), then integrated with
// 8-point Gauss; the grid is step-size-capped, so the reconstruction error
// sits far below the integrator's own.
template <class G>
double layer_integral(const conical_field& field, G&& g) {
    const auto& grid = field.grid;
    if (grid.size() < 2) return 0.0;
    const gas_parameters& gp = field.params;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const flow_state& A = grid[i];      // higher theta
        const flow_state& B = grid[i + 1];  // lower theta
        const double h = B.theta - A.theta;
        if (h == 0.0) continue;
        const auto dA = conical_rhs(A.theta, A.rho, A.u, A.w, gp);
        const auto dB = conical_rhs(B.theta, B.rho, B.u, B.w, gp);
        auto value = [&](double theta) {
            const double t = (theta - A.theta) / h;
            const double t2 = t * t, t3 = t2 * t;
            const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
            const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
            const double rho = h00 * A.rho + h * h10 * dA[0] + h01 * B.rho +
                               h * h11 * dB[0];
            const double u = h00 * A.u + h * h10 * dA[1] + h01 * B.u +
                             h * h11 * dB[1];
            const double w = h00 * A.w + h * h10 * dA[2] + h01 * B.w +
                             h * h11 * dB[2];
            return g(theta, rho, u, w) * std::sin(theta);
        };
        total += gl8(value, B.theta, A.theta);
    }
    return total;
}

double limit_mass_scale(const radon_cone_solution& sol,
                        const test_function& psi) {
    // pair the limit mass with |psi|, not |integral of psi|: an odd-in-phi
    // profile must still produce a usable scale
    test_function abs_psi = psi;
    const auto inner = psi.evaluate;
    abs_psi.evaluate = [inner](double theta, double phi) {
        return std::abs(inner(theta, phi));
    };
    auto abs_profile = [&](double theta) {
        return phi_integral(abs_psi, theta);
    };
    const double background = adaptive_quad(
        [&](double theta) { return abs_profile(theta) * std::sin(theta); },
        sol.theta0, pi, 1e-12);
    const double line =
        sol.mass_weight * std::sin(sol.theta0) * abs_profile(sol.theta0);
    return background + line;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

bool is_field_family(measure_family f) {
    switch (f) {
        case measure_family::mass_flux:
        case measure_family::energy_flux:
        case measure_family::radial_momentum_flux:
        case measure_family::tangential_momentum_flux: return true;
        default: return false;
    }
}

std::string family_name(measure_family f) {
    switch (f) {
        case measure_family::mass_flux: return "mass_flux";
        case measure_family::mass_source: return "mass_source";
        case measure_family::energy_flux: return "energy_flux";
        case measure_family::energy_source: return "energy_source";
        case measure_family::radial_momentum_flux: return "radial_momentum_flux";
        case measure_family::radial_momentum_source:
            return "radial_momentum_source";
        case measure_family::tangential_momentum_flux:
            return "tangential_momentum_flux";
        case measure_family::tangential_kinetic: return "tangential_kinetic";
        case measure_family::mass: return "mass";
        case measure_family::pressure_field: return "pressure";
    }
    return "unknown";
}

test_function as_tangential_field(const test_function& psi) {
    test_function out = psi;
    out.kind = test_function::kind_t::tangential_field;
    return out;
}

std::vector<test_function> default_test_suite(double theta0,
                                              double bump_width) {
    if (!(theta0 > 0.0) || !(theta0 < half_pi))
        throw domain_error("default_test_suite: theta0 must lie in (0, pi/2)");
    if (!(bump_width > 0.0))
        throw domain_error("default_test_suite: bump width must be positive");
    using kind_t = test_function::kind_t;
    using smooth_t = test_function::smoothness_t;
    std::vector<test_function> suite;
    suite.push_back({"one", kind_t::scalar, smooth_t::c1, true,
                     [](double, double) { return 1.0; }});
    suite.push_back({"cos_theta", kind_t::scalar, smooth_t::c1, true,
                     [](double theta, double) { return std::cos(theta); }});
    suite.push_back({"sin2_theta", kind_t::scalar, smooth_t::c1, true,
                     [](double theta, double) {
                         const double s = std::sin(theta);
                         return s * s;
                     }});
    suite.push_back({"cos_phi_sin_theta", kind_t::scalar, smooth_t::c1, false,
                     [](double theta, double phi) {
                         return std::cos(phi) * std::sin(theta);
                     }});
    suite.push_back({"bump_theta0", kind_t::scalar, smooth_t::c1, true,
                     [theta0, bump_width](double theta, double) {
                         const double x = (theta - theta0) / bump_width;
                         if (std::abs(x) >= 1.0) return 0.0;
                         const double y = 1.0 - x * x;
                         return y * y;
                     }});
    return suite;
}

radon_cone_solution limit_solution(double theta0, double E0) {
    if (!(theta0 > 0.0) || !(theta0 < half_pi))
        throw domain_error("limit_solution: theta0 must lie in (0, pi/2), got " +
                           std::to_string(theta0));
    if (!(E0 > 0.5))
        throw domain_error("limit_solution: E0 must exceed 1/2, got " +
                           std::to_string(E0));
    const double st = std::sin(theta0);
    const double ct = std::cos(theta0);
    radon_cone_solution sol;
    sol.theta0 = theta0;
    sol.E0 = E0;
    sol.mass_weight = 0.5 * std::tan(theta0);
    sol.mass_source_weight = 0.5 * st;
    sol.energy_source_weight = 0.5 * st * E0;
    sol.momentum_source_weight = 0.5 * st * ct;
    sol.surface_pressure = st * st;
    return sol;
}

double mass_flux(const conical_field& field) {
    return two_pi * layer_integral(field,
                                   [](double, double rho, double, double w) {
                                       return rho * w;
                                   });
}

double pair_measure(const conical_field& field, measure_family f,
                    const test_function& psi) {
    check_kind(f, psi, "pair_measure");
    const gas_parameters& gp = field.params;
    const double upstream = adaptive_quad(
        [&](double theta) {
            return upstream_density(f, theta, gp.E0, gp.p0) *
                   phi_integral(psi, theta) * std::sin(theta);
        },
        field.beta, pi, 1e-12);
    const double layer = layer_integral(
        field, [&](double theta, double rho, double u, double w) {
            const double p = f == measure_family::pressure_field
                                 ? pressure(rho, u * u + w * w, gp)
                                 : 0.0;
            return layer_density(f, rho, u, w, p, gp.E0) *
                   phi_integral(psi, theta);
        });
    return upstream + layer;
}

double pair_measure(const radon_cone_solution& sol, measure_family f,
                    const test_function& psi) {
    check_kind(f, psi, "pair_measure");
    if (f == measure_family::pressure_field) return 0.0;
    const double background = adaptive_quad(
        [&](double theta) {
            return upstream_density(f, theta, sol.E0, 0.0) *
                   phi_integral(psi, theta) * std::sin(theta);
        },
        sol.theta0, pi, 1e-12);
    const double line = dirac_weight(f, sol) * std::sin(sol.theta0) *
                        phi_integral(psi, sol.theta0);
    return background + line;
}

convergence_report_t convergence_report(double theta0,
                                        std::span<const double> eps_list,
                                        std::span<const test_function> suite,
                                        double E0,
                                        const integrator_options& opts,
                                        double angle_tol) {
    const radon_cone_solution limit = limit_solution(theta0, E0);

    // Solve once per rung; failures poison only that rung's entries.
    struct rung {
        double eps;
        bool ok = false;
        std::string error;
        conical_field field;
    };
    std::vector<rung> rungs;
    for (double eps : eps_list) {
        rung r;
        r.eps = eps;
        try {
            const gas_parameters gp = derive_parameters(eps, E0);
            r.field = solve_direct(theta0, gp, opts, angle_tol).field;
            r.ok = true;
        } catch (const solver_error& e) {
            r.error = e.what();
        }
        rungs.push_back(std::move(r));
    }

    convergence_report_t report;
    report.theta0 = theta0;
    report.E0 = E0;

    constexpr measure_family all_families[] = {
        measure_family::mass_flux,
        measure_family::mass_source,
        measure_family::energy_flux,
        measure_family::energy_source,
        measure_family::radial_momentum_flux,
        measure_family::radial_momentum_source,
        measure_family::tangential_momentum_flux,
        measure_family::tangential_kinetic,
        measure_family::mass,
        measure_family::pressure_field,
    };

    for (measure_family fam : all_families) {
        for (const test_function& base : suite) {
            const test_function psi =
                is_field_family(fam) &&
                        base.kind == test_function::kind_t::scalar
                    ? as_tangential_field(base)
                    : base;
            convergence_series series;
            series.family = fam;
            series.psi_name = base.name;
            const double pairing_limit = pair_measure(limit, fam, psi);
            const double scale =
                std::max(std::abs(pairing_limit), limit_mass_scale(limit, psi));
            bool decreasing = true;
            double prev_gap = -1.0;
            for (const rung& r : rungs) {
                convergence_entry entry;
                entry.eps = r.eps;
                entry.pairing_limit = pairing_limit;
                if (r.ok) {
                    entry.ok = true;
                    entry.pairing_eps = pair_measure(r.field, fam, psi);
                    entry.gap = std::abs(entry.pairing_eps - pairing_limit);
                    entry.relative_gap = entry.gap / scale;
                    const bool converged = entry.gap <= 1e-8 * scale;
                    if (prev_gap >= 0.0 && !converged &&
                        entry.gap > prev_gap * 1.05)
                        decreasing = false;
                    if (!converged) prev_gap = entry.gap;
                } else {
                    entry.error = r.error;
                    decreasing = false;
                }
                series.entries.push_back(std::move(entry));
            }
            series.gaps_decreasing = decreasing;
            report.series.push_back(std::move(series));
        }
    }

    for (const rung& r : rungs) {
        if (!r.ok) continue;
        velocity_ratio_check chk;
        chk.eps = r.eps;
        const double beta = r.field.beta;
        const double sb = std::sin(beta);
        chk.bound = std::tan(beta) * (2.0 * E0 / (sb * sb) + 1.0) * r.eps /
                    (r.eps + 2.0);
        for (const flow_state& s : r.field.grid)
            chk.sup_ratio = std::max(chk.sup_ratio, std::abs(s.u) / s.w);
        chk.ok = chk.sup_ratio <= chk.bound * (1.0 + 1e-12);
        report.ratio_checks.push_back(chk);
    }
    return report;
}

}  // namespace conical_shock
