// End-to-end checks of the command-line tool: golden documents, exit codes,
// stream discipline (documents on stdout, diagnostics on stderr), and the
// --out file path.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "conical_shock/direct.hpp"
#include "conical_shock/io.hpp"

namespace fs = std::filesystem;
using namespace conical_shock;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return slurp(fs::path(GOLDEN_DIR) / name);
}

// Scratch directory for redirected streams and --out targets.
const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("conical_shock_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct run_result {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the installed binary through the shell with stdout/stderr captured.
// env_prefix, when set, is prepended verbatim (e.g. "CONICAL_SHOCK_LOG=info ").
run_result run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    ++counter;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    const std::string cmd = env_prefix + std::string(CLI_BINARY_PATH) + " " +
                            args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    run_result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("direct solve reproduces the golden document, deterministically") {
    const auto first = run_cli("direct --theta0 20 --epsilon 0.01");
    CHECK(first.code == 0);
    CHECK(first.err.empty());
    CHECK(first.out == golden("direct_theta0_20_eps_0p01.json"));

    const auto second = run_cli("direct --theta0 20 --epsilon 0.01");
    CHECK(second.out == first.out);
}

TEST_CASE("sweep reproduces the golden ladder") {
    const auto r = run_cli("sweep --theta0 20 --eps 0.08,0.04,0.02,0.01");
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == golden("sweep_theta0_20.csv"));
}

TEST_CASE("chaplygin picks the branch from the normal Mach number") {
    const auto sub = run_cli("chaplygin --M0 2 --theta0 30");
    CHECK(sub.code == 0);
    CHECK(sub.out == golden("chaplygin_sub.txt"));

    const auto super = run_cli("chaplygin --M0 4 --theta0 30");
    CHECK(super.code == 0);
    CHECK(super.out == golden("chaplygin_super.txt"));
}

TEST_CASE("invalid physical inputs exit with the domain code") {
    const auto bad_angle = run_cli("direct --theta0 95 --epsilon 0.1");
    CHECK(bad_angle.code == 2);
    CHECK(bad_angle.err.find("error:") != std::string::npos);
    CHECK(bad_angle.out.empty());

    const auto subsonic = run_cli("chaplygin --M0 0.5 --theta0 30");
    CHECK(subsonic.code == 2);
    CHECK(subsonic.err.find("error:") != std::string::npos);
}

TEST_CASE("a solve with no attached shock exits with the solver code") {
    const auto r = run_cli("direct --theta0 30 --epsilon 5");
    CHECK(r.code == 3);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("an unwritable output path exits with the io code") {
    const auto r = run_cli(
        "direct --theta0 20 --epsilon 0.1 --out /nonexistent_dir_zz/x.json");
    CHECK(r.code == 4);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("missing required flags fail the parse") {
    const auto r = run_cli("direct");
    CHECK(r.code != 0);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("--out writes the document and prints the summary instead") {
    const fs::path target = scratch_dir() / "sol.json";
    const auto r = run_cli("direct --theta0 20 --epsilon 0.01 --out " +
                           target.string());
    CHECK(r.code == 0);
    REQUIRE(fs::exists(target));
    CHECK(slurp(target) == golden("direct_theta0_20_eps_0p01.json"));

    // stdout carries the summary, not the document
    CHECK(r.out.find("beta_deg = ") != std::string::npos);
    CHECK(r.out.find("surface_pressure = ") != std::string::npos);
    CHECK(r.out.find("grid_points = ") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);

    // and the file round-trips through the parser to the library's answer
    const parsed_solution parsed = parse_solution_json(slurp(target));
    const direct_solution sol = solve_direct(20.0 * std::numbers::pi / 180.0,
                                             derive_parameters(0.01, 1.0));
    CHECK(parsed.beta_deg ==
          doctest::Approx(sol.beta * 180.0 / std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("--seed-oracle reports on stderr and leaves stdout untouched") {
    const auto r = run_cli("direct --theta0 20 --epsilon 0.01 --seed-oracle");
    CHECK(r.code == 0);
    CHECK(r.out == golden("direct_theta0_20_eps_0p01.json"));
    CHECK(r.err.find("oracle_theta_cone_deg = ") != std::string::npos);

    const auto pos = r.err.find("oracle_gap_rad = ");
    REQUIRE(pos != std::string::npos);
    const double gap =
        std::stod(r.err.substr(pos + std::string("oracle_gap_rad = ").size()));
    CHECK(gap < 1e-6);
}

TEST_CASE("csv format emits the grid with its header first") {
    const auto r = run_cli("inverse --beta 30 --epsilon 0.1 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("theta,rho,u,w,p,c,Mn\n", 0) == 0);
}

TEST_CASE("measures keeps the report clean of diagnostics") {
    const auto r = run_cli("measures --theta0 25 --eps 0.08,0.04");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("family,psi,epsilon,", 0) == 0);
    CHECK(r.out.find("ratio_check") == std::string::npos);
    CHECK(r.err.find("ratio_check") != std::string::npos);
}

TEST_CASE("log verbosity is opt-in through the environment") {
    const auto quiet = run_cli("sweep --theta0 20 --eps 0.08,0.04");
    CHECK(quiet.err.empty());

    const auto chatty = run_cli("sweep --theta0 20 --eps 0.08,0.04",
                                "CONICAL_SHOCK_LOG=info ");
    CHECK(chatty.code == 0);
    CHECK(chatty.err.find("info: eps ") != std::string::npos);
    CHECK(chatty.out == quiet.out);
}

}  // TEST_SUITE
