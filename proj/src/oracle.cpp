#include "conical_shock/oracle.hpp"

#include <array>
#include <cmath>
#include <string>

#include "conical_shock/taylor_maccoll.hpp"

namespace conical_shock {

namespace {

using vec3 = std::array<double, 3>;

vec3 rhs_at(double theta, const vec3& y, const gas_parameters& gp) {
    return conical_rhs(theta, y[0], y[1], y[2], gp);
}

// One classical RK4 step of signed size h.
vec3 rk4_step(double theta, const vec3& y, double h, const gas_parameters& gp) {
    const vec3 k1 = rhs_at(theta, y, gp);
    vec3 y2, y3, y4;
    for (int i = 0; i < 3; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
    const vec3 k2 = rhs_at(theta + 0.5 * h, y2, gp);
    for (int i = 0; i < 3; ++i) y3[i] = y[i] + 0.5 * h * k2[i];
    const vec3 k3 = rhs_at(theta + 0.5 * h, y3, gp);
    for (int i = 0; i < 3; ++i) y4[i] = y[i] + h * k3[i];
    const vec3 k4 = rhs_at(theta + h, y4, gp);
    vec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

}  // namespace

oracle_result rk4_cone_angle(double beta, const gas_parameters& gp, double h,
                             crossing_mode mode, double theta_floor) {
    if (!(h > 0.0))
        throw domain_error("rk4_cone_angle: step size must be positive, got " +
                           std::to_string(h));
    const post_shock_state ps = shock_jump(beta, gp);

    double theta = beta;
    vec3 y = {ps.state.rho, ps.state.u, ps.state.w};
    oracle_result res;

    while (true) {
        if (theta - h < theta_floor)
            throw no_cone_found_error(
                "rk4_cone_angle: reached the polar-angle floor with u = " +
                std::to_string(y[1]) + " still negative");
        const vec3 y_next = rk4_step(theta, y, -h, gp);
        ++res.steps;
        if (y_next[1] >= 0.0) {
            res.u_before = y[1];
            if (mode == crossing_mode::linear_interp) {
                // u is linear between the two nodes; u < 0 at theta, >= 0 one
                // step down.
                const double t = y[1] / (y[1] - y_next[1]);
                res.theta_cone = theta - t * h;
            } else {
                // Partial RK4 steps from the last pre-crossing node, secant on
                // the step fraction; keeps the crossing at the scheme's order.
                double s_lo = 0.0, u_lo = y[1];
                double s_hi = h, u_hi = y_next[1];
                double s = h, u_s = u_hi;
                for (int it = 0; it < 80; ++it) {
                    if (std::abs(u_s) < 1e-14 || s_hi - s_lo < 1e-16 * h) break;
                    double cand = s_lo - u_lo * (s_hi - s_lo) / (u_hi - u_lo);
                    const double margin = 1e-3 * (s_hi - s_lo);
                    if (!(cand > s_lo + margin && cand < s_hi - margin))
                        cand = 0.5 * (s_lo + s_hi);
                    s = cand;
                    u_s = rk4_step(theta, y, -s, gp)[1];
                    if (u_s < 0.0) {
                        s_lo = s;
                        u_lo = u_s;
                    } else {
                        s_hi = s;
                        u_hi = u_s;
                    }
                }
                res.theta_cone = theta - s;
            }
            return res;
        }
        theta -= h;
        y = y_next;
    }
}

}  // namespace conical_shock
