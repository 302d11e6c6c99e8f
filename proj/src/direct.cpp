#include "conical_shock/direct.hpp"

#include "conical_shock/io.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace conical_shock {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

double a_priori_gap_bound(double beta, double theta0, const gas_parameters& gp) {
    const double sb = std::sin(beta);
    const double st = std::sin(theta0);
    return gp.eps * (2.0 * gp.Eprime + sb * sb) * std::tan(beta) /
           (2.0 * st * st);
}

}  // namespace

double cone_angle_map(double beta, const gas_parameters& gp,
                      const integrator_options& opts) {
    return integrate_inverse(beta, gp, opts).theta_cone;
}

direct_solution solve_direct(double theta0, const gas_parameters& gp,
                             const integrator_options& opts, double angle_tol) {
    if (!(theta0 > 0.0) || !(theta0 < half_pi))
        throw domain_error("solve_direct: theta0 must lie in (0, pi/2), got " +
                           std::to_string(theta0));
    if (!(angle_tol > 0.0))
        throw domain_error("solve_direct: angle_tol must be positive");

    int evals = 0;
    auto f = [&](double beta) {
        ++evals;
        return cone_angle_map(beta, gp, opts) - theta0;
    };

    // Lower end: just above theta0 the map undershoots (the layer has positive
    // width), so shrink the offset until it does. Probes that fail to
    // integrate shrink the offset too; if the offset bottoms out, there is no
    // usable lower end.
    double beta_lo = 0.0, f_lo = 0.0;
    bool have_lo = false;
    std::string last_error = "lower probes never undershot theta0";
    double delta = std::max(1e-6, 0.01 * theta0);
    while (delta > 4.0 * std::numeric_limits<double>::epsilon() * theta0) {
        const double cand = theta0 + delta;
        try {
            const double fc = f(cand);
            if (fc < 0.0) {
                beta_lo = cand;
                f_lo = fc;
                have_lo = true;
                break;
            }
        } catch (const solver_error& e) {
            last_error = e.what();
        }
        delta *= 0.25;
    }
    if (!have_lo)
        throw no_bracket_error(
            "solve_direct: no valid shock angle just above theta0 = " +
            std::to_string(theta0) + " (" + last_error + ")");

    // Upper end: expand toward pi/2 until the map overshoots.
    double beta_hi = 0.0, f_hi = 0.0;
    bool have_hi = false;
    const double cap = half_pi * (1.0 - 1e-6);
    double cand = 0.5 * (theta0 + half_pi);
    for (int k = 0; k < 60 && cand > beta_lo; ++k) {
        try {
            const double fc = f(cand);
            if (fc > 0.0) {
                beta_hi = cand;
                f_hi = fc;
                have_hi = true;
                break;
            }
            // Still undershooting: tighten the lower end and push on up.
            beta_lo = cand;
            f_lo = fc;
        } catch (const solver_error& e) {
            last_error = e.what();
        }
        if (cap - cand < 1e-12) break;
        cand += 0.5 * (cap - cand);
    }
    if (!have_hi)
        throw no_bracket_error(
            "solve_direct: no shock angle in (" + std::to_string(beta_lo) +
            ", pi/2) maps above theta0 = " + std::to_string(theta0) + " (" +
            last_error + ")");

    // Bisection; f is continuous on the bracket, so the midpoint residual
    // drains to zero and the leftmost bracketed root is the one kept.
    double beta = beta_hi, residual = f_hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (beta_lo + beta_hi);
        const double fm = f(mid);
        if (std::abs(fm) < std::abs(residual)) {
            beta = mid;
            residual = fm;
        }
        if (std::abs(fm) < 0.5 * angle_tol) break;
        if (beta_hi - beta_lo <
            4.0 * std::numeric_limits<double>::epsilon() * beta_hi)
            break;
        if (fm < 0.0) {
            beta_lo = mid;
            f_lo = fm;
        } else {
            beta_hi = mid;
            f_hi = fm;
        }
    }

    direct_solution sol;
    sol.theta0 = theta0;
    sol.beta = beta;
    sol.field = integrate_inverse(beta, gp, opts);
    sol.residual = std::abs(sol.field.theta_cone - theta0);
    sol.iterations = evals;
    if (sol.residual >= angle_tol)
        throw no_cone_found_error(
            "solve_direct: bisection stalled with residual " +
            std::to_string(sol.residual) + " at beta = " + std::to_string(beta));

    // Attached-shock gap against its a-priori bound.
    const double bound = a_priori_gap_bound(beta, theta0, gp);
    if (beta - theta0 > bound * (1.0 + 1e-9))
        throw invariant_region_exit_error(
            "solve_direct: gap " + std::to_string(beta - theta0) +
            " exceeds the a-priori bound " + std::to_string(bound));
    return sol;
}

double epsilon_star(double beta_lo, double beta_hi, double Eprime) {
    if (!(beta_lo > 0.0) || !(beta_lo <= beta_hi) || !(beta_hi < half_pi))
        throw domain_error(
            "epsilon_star: need 0 < beta_lo <= beta_hi < pi/2, got [" +
            std::to_string(beta_lo) + ", " + std::to_string(beta_hi) + "]");
    if (!(Eprime > 0.0))
        throw domain_error("epsilon_star: Eprime must be positive, got " +
                           std::to_string(Eprime));
    const double s_lo = std::sin(beta_lo);
    const double s_hi = std::sin(beta_hi);
    const double first = s_lo * s_lo / Eprime;
    const double second = beta_lo * s_lo * s_lo /
                          ((2.0 * Eprime + s_hi * s_hi) * std::tan(beta_hi));
    return std::min(first, second);
}

sweep_result hypersonic_sweep(double theta0, std::span<const double> eps_list,
                              double E0, const integrator_options& opts,
                              double angle_tol, bool strict) {
    if (eps_list.empty())
        throw domain_error("hypersonic_sweep: empty eps list");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0))
            throw domain_error("hypersonic_sweep: eps values must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw domain_error(
                "hypersonic_sweep: eps ladder must be strictly descending");
    }

    sweep_result sweep;
    sweep.theta0 = theta0;
    sweep.E0 = E0;
    const double target = std::sin(theta0) * std::sin(theta0);

    for (double eps : eps_list) {
        sweep_record rec;
        rec.eps = eps;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const gas_parameters gp = derive_parameters(eps, E0);
            const direct_solution sol = solve_direct(theta0, gp, opts, angle_tol);
            rec.ok = true;
            rec.beta = sol.beta;
            rec.gap = sol.beta - theta0;
            rec.gap_bound = a_priori_gap_bound(sol.beta, theta0, gp);
            rec.surface_pressure = sol.field.surface_pressure;
            if (rec.gap > rec.gap_bound * (1.0 + 1e-9))
                throw invariant_region_exit_error(
                    "hypersonic_sweep: gap exceeds its a-priori bound at eps = " +
                    std::to_string(eps));
        } catch (const solver_error& e) {
            rec.ok = false;
            rec.error = e.what();
        }
        rec.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        sweep.records.push_back(rec);
    }

    // Soft regression guards: gaps shrink along the descending ladder (5%
    // slack) and the surface pressure closes in on the Newtonian value.
    const sweep_record* prev = nullptr;
    double prev_perr = -1.0;
    for (const auto& rec : sweep.records) {
        if (!rec.ok) continue;
        if (prev && rec.gap > prev->gap * 1.05)
            sweep.warnings.push_back(
                "gap did not shrink from eps = " + std::to_string(prev->eps) +
                " to eps = " + std::to_string(rec.eps));
        const double perr = std::abs(rec.surface_pressure - target);
        if (prev_perr >= 0.0 && perr > prev_perr * 1.05)
            sweep.warnings.push_back(
                "surface pressure moved away from sin^2(theta0) at eps = " +
                std::to_string(rec.eps));
        prev = &rec;
        prev_perr = perr;
    }
    if (strict) {
        for (const auto& rec : sweep.records)
            if (!rec.ok)
                throw solver_error("hypersonic_sweep: eps = " +
                                   format_double(rec.eps) +
                                   " failed: " + rec.error);
        if (!sweep.warnings.empty())
            throw invariant_region_exit_error("hypersonic_sweep: " +
                                              sweep.warnings.front());
    }
    return sweep;
}

}  // namespace conical_shock
