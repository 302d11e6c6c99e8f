#include "conical_shock/gas.hpp"

#include <cmath>
#include <string>

namespace conical_shock {

gas_parameters derive_parameters(double eps, double E0) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw domain_error("derive_parameters: eps must be positive, got " +
                           std::to_string(eps));
    if (!(E0 > 0.5) || !std::isfinite(E0))
        throw domain_error("derive_parameters: E0 must exceed 1/2, got " +
                           std::to_string(E0));
    gas_parameters gp;
    gp.eps = eps;
    gp.gamma = 1.0 + eps;
    gp.E0 = E0;
    gp.Eprime = E0 - 0.5;
    gp.p0 = eps / (eps + 1.0) * gp.Eprime;
    gp.M0 = 1.0 / std::sqrt(eps * gp.Eprime);
    return gp;
}

double pressure(double rho, double speed_sq, const gas_parameters& gp) {
    if (!(rho > 0.0))
        throw non_physical_error("pressure: nonpositive density " +
                                 std::to_string(rho));
    const double head = gp.E0 - 0.5 * speed_sq;
    if (!(head > 0.0))
        throw non_physical_error(
            "pressure: speed at or above the limit speed, E0 - |V|^2/2 = " +
            std::to_string(head));
    const double p = gp.eps / (gp.eps + 1.0) * rho * head;
    if (!(p >= 1e-300))
        throw non_physical_error("pressure: underflow, p = " + std::to_string(p));
    return p;
}

double sound_speed_sq(double rho, double speed_sq, const gas_parameters& gp) {
    // gamma p / rho with p from the state law collapses to eps (E0 - |V|^2/2);
    // route through pressure() anyway so the checks fire identically.
    return gp.gamma * pressure(rho, speed_sq, gp) / rho;
}

flow_state make_flow_state(double theta, double rho, double u, double w,
                           const gas_parameters& gp) {
    flow_state s;
    s.theta = theta;
    s.rho = rho;
    s.u = u;
    s.w = w;
    s.p = pressure(rho, u * u + w * w, gp);
    s.c = std::sqrt(gp.gamma * s.p / rho);
    s.Mn = std::abs(u) / s.c;
    s.q_out = w * std::sin(theta) + u * std::cos(theta);
    return s;
}

double entropy_invariant(const flow_state& s, const gas_parameters& gp) {
    if (!(s.rho > 0.0))
        throw non_physical_error("entropy_invariant: nonpositive density " +
                                 std::to_string(s.rho));
    return s.p / std::pow(s.rho, 1.0 + gp.eps);
}

}  // namespace conical_shock
