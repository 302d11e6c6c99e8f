#include "conical_shock/taylor_maccoll.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace conical_shock {

namespace {

using vec3 = std::array<double, 3>;  // (rho, u, w)

vec3 axpy(const vec3& y, double a, const vec3& d) {
    return {y[0] + a * d[0], y[1] + a * d[1], y[2] + a * d[2]};
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) step with the quartic dense-output polynomial
// ---------------------------------------------------------------------------

// Stage coefficients of the DOPRI5 pair (FSAL: k7 is the derivative at the
// step end and seeds the next step).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th-order weights and the embedded 4th-order ones.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights.
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

struct dense_segment {
    double theta0 = 0.0;  // step start
    double h = 0.0;       // signed step actually taken
    vec3 r1{}, r2{}, r3{}, r4{}, r5{};

    vec3 eval(double theta) const {
        const double s = (theta - theta0) / h;
        const double s1 = 1.0 - s;
        vec3 y;
        for (int i = 0; i < 3; ++i)
            y[i] = r1[i] +
                   s * (r2[i] + s1 * (r3[i] + s * (r4[i] + s1 * r5[i])));
        return y;
    }
};

struct dopri_step_result {
    vec3 y1{};
    vec3 f1{};        // derivative at the step end (FSAL)
    double err = 0.0;  // scaled error estimate
    dense_segment dense;
};

template <class Rhs>
dopri_step_result dopri_step(Rhs&& f, double theta, const vec3& y,
                                  const vec3& k1, double h, double rel_tol,
                                  double abs_tol) {
    vec3 k2 = f(theta + c2 * h, axpy(y, h * a21, k1));
    vec3 y3 = y, y4 = y, y5 = y, y6 = y, y7 = y;
    for (int i = 0; i < 3; ++i) {
        y3[i] += h * (a31 * k1[i] + a32 * k2[i]);
    }
    vec3 k3 = f(theta + c3 * h, y3);
    for (int i = 0; i < 3; ++i) {
        y4[i] += h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    }
    vec3 k4 = f(theta + c4 * h, y4);
    for (int i = 0; i < 3; ++i) {
        y5[i] += h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    }
    vec3 k5 = f(theta + c5 * h, y5);
    for (int i = 0; i < 3; ++i) {
        y6[i] += h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                      a65 * k5[i]);
    }
    vec3 k6 = f(theta + h, y6);
    for (int i = 0; i < 3; ++i) {
        y7[i] += h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                      b6 * k6[i]);
    }
    vec3 k7 = f(theta + h, y7);

    dopri_step_result out;
    out.y1 = y7;
    out.f1 = k7;

    double err_sq = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                              e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double scale =
            abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y7[i]));
        err_sq += (e / scale) * (e / scale);
    }
    out.err = std::sqrt(err_sq / 3.0);

    dense_segment& ds = out.dense;
    ds.theta0 = theta;
    ds.h = h;
    for (int i = 0; i < 3; ++i) {
        const double ydiff = y7[i] - y[i];
        const double bspl = h * k1[i] - ydiff;
        ds.r1[i] = y[i];
        ds.r2[i] = ydiff;
        ds.r3[i] = bspl;
        ds.r4[i] = ydiff - h * k7[i] - bspl;
        ds.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                        d6 * k6[i] + d7 * k7[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Invariant region
// ---------------------------------------------------------------------------

// Bounds the field must respect between the shock value and the cone value.
// Used with a relative slack so roundoff never trips them; a real escape is
// an integration bug or out-of-theory parameters.
struct region_bounds {
    double rho_lo, rho_hi;
    double u_lo;             // u must stay in (u_lo, 0] until the crossing
    double w_lo, w_hi;
    double csq_lo, csq_hi;
};

region_bounds make_region_bounds(const post_shock_state& ps,
                                 const gas_parameters& gp) {
    region_bounds b;
    b.rho_lo = ps.state.rho;
    // Entropy invariant plus the sonic ceiling c^2 < eps E0 bound the density:
    // rho^eps < eps E0 rho(beta)^gamma / ((eps+1) p(beta)).
    b.rho_hi = std::pow(gp.eps * gp.E0 * std::pow(ps.state.rho, gp.gamma) /
                            ((gp.eps + 1.0) * ps.state.p),
                        1.0 / gp.eps);
    b.u_lo = ps.state.u;
    b.w_lo = ps.state.w;
    b.w_hi = std::sqrt(2.0 * gp.E0);
    b.csq_lo = ps.state.c * ps.state.c;
    b.csq_hi = gp.eps * gp.E0;
    return b;
}

void check_region(double theta, const vec3& y, const region_bounds& b,
                  const gas_parameters& gp) {
    const auto [rho, u, w] = y;
    const double slack = 1e-7;
    auto fail = [&](const char* what, double value) {
        throw invariant_region_exit_error(
            "integrate_inverse: " + std::string(what) + " = " +
            std::to_string(value) + " left the invariant region at theta = " +
            std::to_string(theta));
    };
    if (rho < b.rho_lo * (1.0 - slack) || rho > b.rho_hi * (1.0 + slack))
        fail("rho", rho);
    if (u < b.u_lo * (1.0 + slack)) fail("u", u);
    if (w < b.w_lo * (1.0 - slack) || w > b.w_hi * (1.0 + slack)) fail("w", w);
    const double csq = gp.eps * (gp.E0 - 0.5 * (u * u + w * w));
    if (csq < b.csq_lo * (1.0 - slack) || csq > b.csq_hi * (1.0 + slack))
        fail("c^2", csq);
    if (u * u >= csq) fail("Mn", std::sqrt(u * u / csq));
}

}  // namespace

// ---------------------------------------------------------------------------
// Right-hand side
// ---------------------------------------------------------------------------

std::array<double, 3> conical_rhs(double theta, double rho, double u, double w,
                                  const gas_parameters& gp, double det_floor) {
    if (!(theta > 0.0))
        throw domain_error("conical_rhs: theta must be positive, got " +
                           std::to_string(theta));
    const double csq = sound_speed_sq(rho, u * u + w * w, gp);
    const double det = csq - u * u;
    if (det <= det_floor)
        throw sonic_singularity_error(
            "conical_rhs: c^2 - u^2 = " + std::to_string(det) +
            " at theta = " + std::to_string(theta) +
            " is at or below the sonic floor");
    const double cot = std::cos(theta) / std::sin(theta);
    return {
        rho * u * (u * cot + w) / det,
        (u * u * w - csq * u * cot - 2.0 * csq * w) / det,
        u,
    };
}

// ---------------------------------------------------------------------------
// Inverse integration
// ---------------------------------------------------------------------------

conical_field integrate_inverse(double beta, const gas_parameters& gp,
                                const integrator_options& opts) {
    const post_shock_state ps = shock_jump(beta, gp);
    const double det_floor =
        opts.det_floor_frac * ps.state.c * ps.state.c;
    const region_bounds bounds = make_region_bounds(ps, gp);

    auto f = [&](double theta, const vec3& y) -> vec3 {
        return conical_rhs(theta, y[0], y[1], y[2], gp, det_floor);
    };

    conical_field field;
    field.params = gp;
    field.beta = beta;
    field.grid.push_back(ps.state);

    const double S_ref = entropy_invariant(ps.state, gp);
    field_diagnostics& diag = field.diagnostics;
    diag.min_det = ps.state.c * ps.state.c - ps.state.u * ps.state.u;

    // The gap to the cone is at most |u(beta)| / cos(beta); start well inside
    // it and let the controller take over.
    const double span_est =
        std::min(std::abs(ps.state.u) / std::cos(beta), beta - opts.theta_floor);
    double h = -std::min(opts.max_step, span_est / 50.0);
    if (std::abs(h) < 16.0 * std::numeric_limits<double>::epsilon() * beta)
        throw no_cone_found_error(
            "integrate_inverse: the layer spans less than the floating-point "
            "resolution of theta at beta = " + std::to_string(beta));

    double theta = beta;
    vec3 y = {ps.state.rho, ps.state.u, ps.state.w};
    vec3 k1 = f(theta, y);

    bool crossed = false;
    dense_segment crossing_seg;
    double theta_after = 0.0;

    while (!crossed) {
        if (diag.steps_accepted + diag.steps_rejected >= opts.max_steps)
            throw no_cone_found_error(
                "integrate_inverse: step budget exhausted at theta = " +
                std::to_string(theta) + " with u = " + std::to_string(y[1]));

        // Clamp to the floor; running into it with u still negative means no
        // cone surface on this ray.
        if (theta + h < opts.theta_floor) h = opts.theta_floor - theta;

        dopri_step_result st;
        try {
            st = dopri_step(f, theta, y, k1, h, opts.rel_tol, opts.abs_tol);
        } catch (const solver_error&) {
            // A trial stage left the representable regime; treat like a
            // rejected step unless the step is already tiny.
            if (std::abs(h) <
                64.0 * std::numeric_limits<double>::epsilon() * std::abs(theta))
                throw;
            h *= 0.5;
            ++diag.steps_rejected;
            continue;
        }

        if (st.err > 1.0) {
            ++diag.steps_rejected;
            h *= std::max(0.2, 0.9 * std::pow(st.err, -0.2));
            continue;
        }

        ++diag.steps_accepted;
        const double theta_new = theta + h;

        if (st.y1[1] >= 0.0) {
            // The tangential velocity crossed zero inside this step; hand the
            // segment to the event refinement.
            crossed = true;
            crossing_seg = st.dense;
            theta_after = theta_new;
        } else {
            check_region(theta_new, st.y1, bounds, gp);
            flow_state s = make_flow_state(theta_new, st.y1[0], st.y1[1],
                                           st.y1[2], gp);
            diag.entropy_drift =
                std::max(diag.entropy_drift,
                         std::abs(entropy_invariant(s, gp) - S_ref) /
                             std::abs(S_ref));
            diag.min_det = std::min(diag.min_det, s.c * s.c - s.u * s.u);
            field.grid.push_back(s);

            if (theta_new <= opts.theta_floor)
                throw no_cone_found_error(
                    "integrate_inverse: reached the polar-angle floor " +
                    std::to_string(opts.theta_floor) + " with u = " +
                    std::to_string(st.y1[1]) + " still negative");

            theta = theta_new;
            y = st.y1;
            k1 = st.f1;
            double grow = 0.9 * std::pow(std::max(st.err, 1e-10), -0.2);
            h *= std::clamp(grow, 0.2, 5.0);
            if (std::abs(h) > opts.max_step)
                h = std::copysign(opts.max_step, h);
        }
    }

    // Refine the crossing on the dense output: bisection with a secant pass,
    // on u(theta) over [theta_after, theta] (increasing u toward theta_after).
    double lo = theta, hi = theta_after;  // u(lo) < 0 <= u(hi)
    double u_lo = y[1], u_hi = crossing_seg.eval(hi)[1];
    double root = hi, u_root = u_hi;
    for (int it = 0; it < 200; ++it) {
        if (std::abs(u_root) < opts.u_tol) break;
        if (std::abs(hi - lo) <
            4.0 * std::numeric_limits<double>::epsilon() * std::abs(lo))
            break;
        double mid = 0.5 * (lo + hi);
        // Secant proposal, kept only if it lands safely inside the bracket.
        const double denom = u_hi - u_lo;
        if (denom != 0.0) {
            const double sec = lo - u_lo * (hi - lo) / denom;
            const double margin = 0.1 * std::abs(hi - lo);
            if (std::min(std::abs(sec - lo), std::abs(sec - hi)) > margin)
                mid = sec;
        }
        root = mid;
        u_root = crossing_seg.eval(mid)[1];
        if (u_root < 0.0) {
            lo = mid;
            u_lo = u_root;
        } else {
            hi = mid;
            u_hi = u_root;
        }
    }

    const vec3 yc = crossing_seg.eval(root);
    diag.u_at_event = std::abs(yc[1]);

    // Snap the surface state to u = 0 exactly; the residual is recorded above.
    flow_state surf = make_flow_state(root, yc[0], 0.0, yc[2], gp);
    diag.entropy_drift = std::max(
        diag.entropy_drift,
        std::abs(entropy_invariant(surf, gp) - S_ref) / std::abs(S_ref));
    diag.min_det = std::min(diag.min_det, surf.c * surf.c);
    field.grid.push_back(surf);
    field.theta_cone = root;
    field.surface_pressure = surf.p;

    // A-priori gap bound, directly from the jump state.
    const double gap_bound = std::abs(ps.state.u) / std::cos(beta);
    if (beta - root > gap_bound * (1.0 + 1e-9) + opts.u_tol)
        throw invariant_region_exit_error(
            "integrate_inverse: layer width " + std::to_string(beta - root) +
            " exceeds its a-priori bound " + std::to_string(gap_bound));

    return field;
}

// ---------------------------------------------------------------------------
// Monotonicity report
// ---------------------------------------------------------------------------

monotonicity_report_t monotonicity_report(const conical_field& field,
                                          double tol) {
    monotonicity_report_t rep;
    const auto& g = field.grid;
    auto flag = [&](const char* q, std::size_t i, double mag) {
        rep.violations.push_back({q, i, mag});
    };
    // Grid runs from the shock (front) toward the cone (back): rho, u, w, c,
    // q_out must not shrink and Mn must not grow along it, all up to tol on
    // the natural scale of each quantity.
    for (std::size_t i = 1; i < g.size(); ++i) {
        const flow_state& a = g[i - 1];
        const flow_state& b = g[i];
        auto nondecreasing = [&](const char* q, double prev, double next) {
            const double allowance =
                tol * std::max(1.0, std::max(std::abs(prev), std::abs(next)));
            if (next < prev - allowance) flag(q, i, prev - next);
        };
        nondecreasing("rho", a.rho, b.rho);
        nondecreasing("u", a.u, b.u);
        nondecreasing("w", a.w, b.w);
        nondecreasing("c", a.c, b.c);
        nondecreasing("q_out", a.q_out, b.q_out);
        nondecreasing("Mn", b.Mn, a.Mn);
        if (!(b.q_out > 0.0)) flag("q_out", i, -b.q_out);
    }
    if (!g.empty() && !(g.front().q_out > 0.0)) flag("q_out", 0, -g.front().q_out);
    return rep;
}

}  // namespace conical_shock
