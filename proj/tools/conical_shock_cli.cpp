// Command-line front end: direct and inverse cone solves, the hypersonic
// sweep, the measure-convergence report, and the Chaplygin closed forms.
// Angles cross this interface in degrees; tolerances stay in radians.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conical_shock/direct.hpp"
#include "conical_shock/io.hpp"
#include "conical_shock/measures.hpp"
#include "conical_shock/oracle.hpp"

namespace {

using namespace conical_shock;

constexpr double deg_to_rad = std::numbers::pi / 180.0;
constexpr double rad_to_deg = 180.0 / std::numbers::pi;

constexpr int exit_ok = 0;
constexpr int exit_domain = 2;
constexpr int exit_solver = 3;
constexpr int exit_io = 4;

// Verbosity from CONICAL_SHOCK_LOG: error (default), info, debug.
int log_level() {
    static const int level = [] {
        const char* env = std::getenv("CONICAL_SHOCK_LOG");
        if (!env) return 0;
        const std::string v(env);
        if (v == "debug") return 2;
        if (v == "info") return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "info: " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "debug: " << msg << "\n";
}

// Everything the subcommands need, straight from the parsed flags.
struct run_config {
    double theta0_deg = 20.0;
    double beta_deg = 30.0;
    double eps = 0.01;
    std::vector<double> eps_list;
    double E0 = 1.0;
    double M0 = 2.0;
    double rho0 = 1.0;
    double angle_tol = 1e-8;
    double bump_width = 0.4;
    integrator_options integ;
    std::string out_path;
    std::string format = "json";
    bool seed_oracle = false;
};

// Writes to the configured path (atomically) or to stdout.
int emit_document(const run_config& cfg, const std::string& content) {
    if (cfg.out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return exit_ok;
    }
    try {
        write_file_atomic(cfg.out_path, content);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    log_info("wrote " + cfg.out_path);
    return exit_ok;
}

void print_summary_line(const std::string& key, double value) {
    std::printf("%s = %s\n", key.c_str(), format_double(value).c_str());
}

// Oracle cross-checks are diagnostics: keep them off stdout so a piped
// document stays parseable.
void print_diag_line(const std::string& key, double value) {
    std::fprintf(stderr, "%s = %s\n", key.c_str(), format_double(value).c_str());
}

int cmd_direct(const run_config& cfg) {
    const gas_parameters gp = derive_parameters(cfg.eps, cfg.E0);
    log_debug("upstream Mach " + format_double(gp.M0));
    const direct_solution sol =
        solve_direct(cfg.theta0_deg * deg_to_rad, gp, cfg.integ, cfg.angle_tol);

    const std::string doc = cfg.format == "csv" ? grid_to_csv(sol.field)
                                                : solution_to_json(sol);
    if (!cfg.out_path.empty()) {
        print_summary_line("theta0_deg", sol.theta0 * rad_to_deg);
        print_summary_line("beta_deg", sol.beta * rad_to_deg);
        print_summary_line("surface_pressure", sol.field.surface_pressure);
        print_summary_line("residual_rad", sol.residual);
        std::printf("grid_points = %zu\n", sol.field.grid.size());
    }
    if (cfg.seed_oracle) {
        const oracle_result orc = rk4_cone_angle(sol.beta, gp, 1e-6);
        print_diag_line("oracle_theta_cone_deg", orc.theta_cone * rad_to_deg);
        print_diag_line("oracle_gap_rad",
                        std::abs(orc.theta_cone - sol.field.theta_cone));
    }
    return emit_document(cfg, doc);
}

int cmd_inverse(const run_config& cfg) {
    const gas_parameters gp = derive_parameters(cfg.eps, cfg.E0);
    const conical_field field =
        integrate_inverse(cfg.beta_deg * deg_to_rad, gp, cfg.integ);

    direct_solution sol;
    sol.theta0 = field.theta_cone;
    sol.beta = field.beta;
    sol.residual = field.diagnostics.u_at_event;
    sol.field = field;

    const std::string doc = cfg.format == "csv" ? grid_to_csv(field)
                                                : solution_to_json(sol);
    if (!cfg.out_path.empty()) {
        print_summary_line("beta_deg", field.beta * rad_to_deg);
        print_summary_line("theta_cone_deg", field.theta_cone * rad_to_deg);
        print_summary_line("surface_pressure", field.surface_pressure);
    }
    if (cfg.seed_oracle) {
        const oracle_result orc = rk4_cone_angle(field.beta, gp, 1e-6);
        print_diag_line("oracle_theta_cone_deg", orc.theta_cone * rad_to_deg);
        print_diag_line("oracle_gap_rad",
                        std::abs(orc.theta_cone - field.theta_cone));
    }
    return emit_document(cfg, doc);
}

int cmd_sweep(const run_config& cfg) {
    const sweep_result sweep =
        hypersonic_sweep(cfg.theta0_deg * deg_to_rad, cfg.eps_list, cfg.E0,
                         cfg.integ, cfg.angle_tol, /*strict=*/false);
    for (const std::string& w : sweep.warnings)
        std::cerr << "warning: " << w << "\n";
    for (const sweep_record& rec : sweep.records) {
        if (rec.ok)
            log_info("eps " + format_double(rec.eps) + ": beta_deg " +
                     format_double(rec.beta * rad_to_deg));
        else
            std::cerr << "warning: eps " << format_double(rec.eps)
                      << " failed: " << rec.error << "\n";
    }
    return emit_document(cfg, sweep_to_csv(sweep));
}

int cmd_measures(const run_config& cfg) {
    const double theta0 = cfg.theta0_deg * deg_to_rad;
    const auto suite = default_test_suite(theta0, cfg.bump_width);
    const convergence_report_t report = convergence_report(
        theta0, cfg.eps_list, suite, cfg.E0, cfg.integ, cfg.angle_tol);
    for (const velocity_ratio_check& chk : report.ratio_checks) {
        // diagnostics go to stderr so a piped stdout stays pure CSV
        std::fprintf(stderr,
                     "ratio_check eps = %s: sup|u/w| = %s, bound = %s, %s\n",
                     format_double(chk.eps).c_str(),
                     format_double(chk.sup_ratio).c_str(),
                     format_double(chk.bound).c_str(),
                     chk.ok ? "ok" : "VIOLATED");
    }
    return emit_document(cfg, report_to_csv(report));
}

int cmd_chaplygin(const run_config& cfg) {
    const double theta0 = cfg.theta0_deg * deg_to_rad;
    if (!(theta0 > 0.0) || !(theta0 < std::numbers::pi / 2.0))
        throw domain_error("chaplygin: theta0 must lie in (0, 90) degrees");
    chaplygin_parameters cp;
    cp.rho0 = cfg.rho0;
    cp.M0 = cfg.M0;
    if (cfg.M0 * std::sin(theta0) < 1.0) {
        const double beta0 = chaplygin_shock_angle(cfg.M0);
        std::printf("beta0_deg = %.6f\n", beta0 * rad_to_deg);
        std::printf(
            "note: M0 < 1/sin(theta0): attached conical discontinuity, "
            "independent of the cone angle\n");
    } else {
        std::printf("W_C = %.6f\n", chaplygin_surface_pressure(theta0, cp));
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Supersonic flow past a straight cone: attached-shock solves, the "
        "hypersonic limit, and its measure-convergence diagnostics"};
    app.require_subcommand(1);

    run_config cfg;

    auto add_integ_flags = [&cfg](CLI::App* cmd) {
        cmd->add_option("--rel-tol", cfg.integ.rel_tol,
                        "integrator relative tolerance");
        cmd->add_option("--abs-tol", cfg.integ.abs_tol,
                        "integrator absolute tolerance");
        cmd->add_option("--u-tol", cfg.integ.u_tol,
                        "surface-event tolerance on the tangential velocity");
        cmd->add_option("--angle-tol", cfg.angle_tol,
                        "shock-angle tolerance in radians");
    };
    auto add_output_flags = [&cfg](CLI::App* cmd) {
        cmd->add_option("--out", cfg.out_path,
                        "output file (written atomically; stdout if absent)");
    };

    CLI::App* direct = app.add_subcommand(
        "direct", "solve for the shock angle attached to a given cone");
    direct->add_option("--theta0", cfg.theta0_deg, "cone half-angle, degrees")
        ->required();
    direct->add_option("--epsilon", cfg.eps, "gamma - 1")->required();
    direct->add_option("--E0", cfg.E0, "Bernoulli constant");
    direct->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    direct->add_flag("--seed-oracle", cfg.seed_oracle,
                     "cross-check the cone angle against the fixed-step check "
                     "integrator");
    add_integ_flags(direct);
    add_output_flags(direct);

    CLI::App* inverse = app.add_subcommand(
        "inverse", "integrate the layer behind a given shock angle");
    inverse->add_option("--beta", cfg.beta_deg, "shock angle, degrees")
        ->required();
    inverse->add_option("--epsilon", cfg.eps, "gamma - 1")->required();
    inverse->add_option("--E0", cfg.E0, "Bernoulli constant");
    inverse->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    inverse->add_flag("--seed-oracle", cfg.seed_oracle,
                      "cross-check the cone angle against the fixed-step check "
                      "integrator");
    add_integ_flags(inverse);
    add_output_flags(inverse);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "solve along a descending ladder of gamma - 1 values");
    sweep->add_option("--theta0", cfg.theta0_deg, "cone half-angle, degrees")
        ->required();
    sweep
        ->add_option("--eps", cfg.eps_list,
                     "descending comma-separated gamma - 1 ladder")
        ->required()
        ->delimiter(',');
    sweep->add_option("--E0", cfg.E0, "Bernoulli constant");
    add_integ_flags(sweep);
    add_output_flags(sweep);

    CLI::App* measures = app.add_subcommand(
        "measures", "pair the solution measures against the test-function "
                    "suite along a ladder");
    measures->add_option("--theta0", cfg.theta0_deg, "cone half-angle, degrees")
        ->required();
    measures
        ->add_option("--eps", cfg.eps_list,
                     "descending comma-separated gamma - 1 ladder")
        ->required()
        ->delimiter(',');
    measures->add_option("--E0", cfg.E0, "Bernoulli constant");
    measures->add_option("--bump-width", cfg.bump_width,
                         "width of the bump test function, radians");
    add_integ_flags(measures);
    add_output_flags(measures);

    CLI::App* chaplygin = app.add_subcommand(
        "chaplygin", "Chaplygin-gas discontinuity angle or surface pressure");
    chaplygin->add_option("--M0", cfg.M0, "upstream Mach number")->required();
    chaplygin
        ->add_option("--theta0", cfg.theta0_deg, "cone half-angle, degrees")
        ->required();
    chaplygin->add_option("--rho0", cfg.rho0, "upstream density");

    CLI11_PARSE(app, argc, argv);

    try {
        if (direct->parsed()) return cmd_direct(cfg);
        if (inverse->parsed()) return cmd_inverse(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (measures->parsed()) return cmd_measures(cfg);
        if (chaplygin->parsed()) return cmd_chaplygin(cfg);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_solver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
