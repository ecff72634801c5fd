#include "schwinger/io.hpp"

#include "schwinger/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace schwinger {

namespace {

using nlohmann::json;

std::string format_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// JSON has no NaN/Inf; emit null for non-finite values.
json finite_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

json window_json(const FitWindow& w) { return json::array({w.t_min, w.t_max}); }

json mass_rate_json(const MassRate& row) {
    json j;
    j["mprime"] = row.mprime;
    j["window"] = window_json(row.window);
    j["ok"] = row.ok;
    j["degraded"] = row.degraded;
    if (row.ok) {
        j["gamma"] = row.fit.gamma;
        j["c1"] = row.fit.c1;
        j["var_gamma"] = row.fit.var_gamma;
        j["var_c1"] = row.fit.var_c1;
        j["cov"] = row.fit.cov;
        j["points_used"] = row.fit.points_used;
        j["weighted"] = row.fit.weighted;
        j["c1_in_range"] = row.c1_in_range;
    } else {
        j["error"] = row.error;
    }
    return j;
}

json table_json(const RateTable& table, RateConvention reported) {
    json j;
    j["mode"] = mode_name(table.mode);
    j["volume"] = table.volume;
    j["complete"] = table.complete;
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(mass_rate_json(row));
    j["rows"] = rows;
    j["gamma_3p1"] = {
        {"literal", finite_or_null(table.gamma_3p1_literal)},
        {"paper_match", finite_or_null(table.gamma_3p1_paper)},
        {"stderr_literal", finite_or_null(table.err_3p1_literal)},
        {"stderr_paper_match", finite_or_null(table.err_3p1_paper)},
    };
    j["reported_convention"] =
        reported == RateConvention::Literal ? "literal" : "paper_match";
    j["gamma_3p1_reported"] = finite_or_null(reported == RateConvention::Literal
                                                 ? table.gamma_3p1_literal
                                                 : table.gamma_3p1_paper);
    return j;
}

json config_json(const ExperimentConfig& config) {
    json j;
    j["lattice"] = {{"m", config.lattice.m},
                    {"eE", config.lattice.eE},
                    {"a", config.lattice.a},
                    {"n_sites", config.lattice.n_sites},
                    {"n_full", config.lattice.n_full}};
    j["mass_grid"] = config.mass_grid;
    j["time_grid"] = config.time_grid;
    j["n_t"] = config.n_t;
    j["n_shot"] = config.n_shot;
    j["noise"] = {{"p_cnot", config.noise.p_cnot}, {"p_readout", config.noise.p_readout}};
    json modes = json::array();
    for (RunMode mode : config.modes) modes.push_back(mode_name(mode));
    j["modes"] = modes;
    j["seed"] = config.seed;
    j["convention"] = config.convention == RateConvention::Literal ? "literal" : "paper";
    j["maintext_window_m14"] = config.maintext_window_m14;
    json windows;
    for (double mprime : config.mass_grid) {
        windows[format_mass(mprime)] = window_json(config.window_for(mprime));
    }
    j["fit_windows"] = windows;
    return j;
}

}  // namespace

std::string series_to_csv(const DecaySeries& series) {
    std::string out = "t,pvac,stderr\n";
    for (const auto& p : series.points) {
        out += format_g(p.t);
        out += ',';
        out += format_g(p.pvac);
        out += ',';
        out += format_g(p.std_error);
        out += '\n';
    }
    return out;
}

std::string counts_to_json(const Counts& counts) {
    json j;
    j["total"] = counts.total;
    json hist;
    for (const auto& [bits, n] : counts.histogram) hist[bits] = n;
    j["counts"] = hist;
    return j.dump(2) + "\n";
}

std::string vqe_record_to_json(double mprime, double a, const VqeResult& result) {
    json j;
    j["mprime"] = mprime;
    j["a"] = a;
    j["eE"] = 0.0;
    j["theta"] = result.params.theta;
    j["energy"] = result.energy;
    j["fidelity"] = result.fidelity;
    j["converged"] = result.converged;
    j["evaluations"] = result.evaluations;
    return j.dump(2) + "\n";
}

std::string rate_table_to_json(const RateTable& table, RateConvention reported) {
    return table_json(table, reported).dump(2) + "\n";
}

std::string rate_tables_to_json(const std::map<RunMode, RateTable>& tables,
                                RateConvention reported) {
    json modes;
    for (const auto& [mode, table] : tables) modes[mode_name(mode)] = table_json(table, reported);
    json j;
    j["modes"] = modes;
    return j.dump(2) + "\n";
}

std::string config_to_json(const ExperimentConfig& config) {
    return config_json(config).dump(2) + "\n";
}

std::string meta_to_json(const ExperimentConfig& config) {
    json j;
    j["artifact"] = "schwinger-pairs";
    j["version"] = "1.0.0";
    j["seed"] = config.seed;
    j["config"] = config_json(config);
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw validation_error("cannot write file '" + path + "'");
    out << content;
}

}  // namespace schwinger
