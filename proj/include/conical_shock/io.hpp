// Serialization of solver results: JSON and CSV emitters with
// shortest-round-trip float formatting, the matching parser for the JSON
// solution document, and an atomic file writer. Shared by the CLI and tests
// so the round-trip guarantees are testable in-process.
#ifndef CONICAL_SHOCK_IO_HPP
#define CONICAL_SHOCK_IO_HPP

#include <string>

#include "conical_shock/direct.hpp"
#include "conical_shock/measures.hpp"

namespace conical_shock {

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

// JSON solution document for a solved field. Angles in degrees, grid states in
// solver units; parse_solution_json inverts it bit-exactly.
std::string solution_to_json(const direct_solution& sol);

struct parsed_solution {
    double theta0_deg = 0.0;
    double beta_deg = 0.0;
    double eps = 0.0;
    double E0 = 0.0;
    double surface_pressure = 0.0;
    double residual = 0.0;
    std::vector<flow_state> grid;
};

// Throws std::runtime_error on malformed input.
parsed_solution parse_solution_json(const std::string& text);

// Grid as CSV: header theta,rho,u,w,p,c,Mn then one row per state.
std::string grid_to_csv(const conical_field& field);

// Sweep as CSV: epsilon,beta_deg,gap_deg,gap_bound_deg,p_surface,newtonian_sin2,status.
std::string sweep_to_csv(const sweep_result& sweep);

// Convergence report as CSV:
// family,psi,epsilon,pairing_eps,pairing_limit,gap,relative_gap,status.
std::string report_to_csv(const convergence_report_t& report);

// Writes via a temp file in the same directory plus rename, so readers never
// observe a partial file. Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace conical_shock

#endif
