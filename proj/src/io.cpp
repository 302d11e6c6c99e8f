#include "conical_shock/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <system_error>

#include <json.hpp>

namespace conical_shock {

namespace {

constexpr double rad_to_deg = 180.0 / std::numbers::pi;

nlohmann::json state_to_json(const flow_state& s) {
    return {{"theta", s.theta}, {"rho", s.rho}, {"u", s.u},  {"w", s.w},
            {"p", s.p},         {"c", s.c},     {"Mn", s.Mn}};
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string solution_to_json(const direct_solution& sol) {
    nlohmann::json doc;
    doc["theta0_deg"] = sol.theta0 * rad_to_deg;
    doc["beta_deg"] = sol.beta * rad_to_deg;
    doc["epsilon"] = sol.field.params.eps;
    doc["E0"] = sol.field.params.E0;
    doc["surface_pressure"] = sol.field.surface_pressure;
    doc["residual"] = sol.residual;
    nlohmann::json grid = nlohmann::json::array();
    for (const flow_state& s : sol.field.grid) grid.push_back(state_to_json(s));
    doc["grid"] = std::move(grid);
    return doc.dump(2) + "\n";
}

parsed_solution parse_solution_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("parse_solution_json: ") + e.what());
    }
    try {
        parsed_solution out;
        out.theta0_deg = doc.at("theta0_deg").get<double>();
        out.beta_deg = doc.at("beta_deg").get<double>();
        out.eps = doc.at("epsilon").get<double>();
        out.E0 = doc.at("E0").get<double>();
        out.surface_pressure = doc.at("surface_pressure").get<double>();
        out.residual = doc.at("residual").get<double>();
        for (const auto& item : doc.at("grid")) {
            flow_state s{};
            s.theta = item.at("theta").get<double>();
            s.rho = item.at("rho").get<double>();
            s.u = item.at("u").get<double>();
            s.w = item.at("w").get<double>();
            s.p = item.at("p").get<double>();
            s.c = item.at("c").get<double>();
            s.Mn = item.at("Mn").get<double>();
            s.q_out = s.w * std::sin(s.theta) + s.u * std::cos(s.theta);
            out.grid.push_back(s);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(
            std::string("parse_solution_json: malformed solution document: ") +
            e.what());
    }
}

std::string grid_to_csv(const conical_field& field) {
    std::string out = "theta,rho,u,w,p,c,Mn\n";
    for (const flow_state& s : field.grid) {
        out += format_double(s.theta);
        out += ',';
        out += format_double(s.rho);
        out += ',';
        out += format_double(s.u);
        out += ',';
        out += format_double(s.w);
        out += ',';
        out += format_double(s.p);
        out += ',';
        out += format_double(s.c);
        out += ',';
        out += format_double(s.Mn);
        out += '\n';
    }
    return out;
}

std::string sweep_to_csv(const sweep_result& sweep) {
    const double st = std::sin(sweep.theta0);
    std::string out =
        "epsilon,beta_deg,gap_deg,gap_bound_deg,p_surface,newtonian_sin2,status\n";
    for (const sweep_record& rec : sweep.records) {
        out += format_double(rec.eps);
        out += ',';
        if (rec.ok) {
            out += format_double(rec.beta * rad_to_deg);
            out += ',';
            out += format_double(rec.gap * rad_to_deg);
            out += ',';
            out += format_double(rec.gap_bound * rad_to_deg);
            out += ',';
            out += format_double(rec.surface_pressure);
            out += ',';
            out += format_double(st * st);
            out += ",ok\n";
        } else {
            out += ",,,,";
            out += format_double(st * st);
            out += ",failed\n";
        }
    }
    return out;
}

std::string report_to_csv(const convergence_report_t& report) {
    std::string out =
        "family,psi,epsilon,pairing_eps,pairing_limit,gap,relative_gap,status\n";
    for (const convergence_series& series : report.series) {
        for (const convergence_entry& e : series.entries) {
            out += family_name(series.family);
            out += ',';
            out += series.psi_name;
            out += ',';
            out += format_double(e.eps);
            out += ',';
            if (e.ok) {
                out += format_double(e.pairing_eps);
                out += ',';
                out += format_double(e.pairing_limit);
                out += ',';
                out += format_double(e.gap);
                out += ',';
                out += format_double(e.relative_gap);
                out += ",ok\n";
            } else {
                out += ",";
                out += format_double(e.pairing_limit);
                out += ",,,failed\n";
            }
        }
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("write_file_atomic: cannot open " +
                                         tmp.string());
        f.write(content.data(),
                static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) throw std::runtime_error("write_file_atomic: write failed for " +
                                         tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("write_file_atomic: rename to " + path +
                                 " failed: " + ec.message());
    }
}

}  // namespace conical_shock
