#include "schwinger/config.hpp"

#include "schwinger/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace schwinger {

const char* mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Exact: return "exact";
        case RunMode::Noiseless: return "noiseless";
        case RunMode::Noisy: return "noisy";
        case RunMode::Corrected: return "corrected";
    }
    return "?";
}

RunMode mode_from_name(const std::string& name) {
    if (name == "exact") return RunMode::Exact;
    if (name == "noiseless") return RunMode::Noiseless;
    if (name == "noisy") return RunMode::Noisy;
    if (name == "corrected") return RunMode::Corrected;
    throw validation_error("unknown mode '" + name +
                           "' (expected exact, noiseless, noisy or corrected)");
}

std::string format_mass(double mprime) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", mprime);
    return buf;
}

FitWindow default_window(double mprime, bool maintext_variant_m14) {
    const auto near = [&](double x) { return std::abs(mprime - x) < 1e-9; };
    if (near(1.0) || near(2.0)) return {0.15, 0.35};
    if (near(1.4) && maintext_variant_m14) return {0.10, 0.45};
    if (near(1.6)) return {0.15, 0.42};
    return {0.15, 0.40};
}

ExperimentConfig default_config() {
    ExperimentConfig config;
    config.time_grid.resize(10);
    for (int i = 0; i < 10; ++i) config.time_grid[static_cast<size_t>(i)] = i * 0.05;
    return config;
}

FitWindow ExperimentConfig::window_for(double mprime) const {
    const auto it = window_overrides.find(format_mass(mprime));
    if (it != window_overrides.end()) return it->second;
    return default_window(mprime, maintext_window_m14);
}

void ExperimentConfig::validate() const {
    lattice.validate();
    noise.validate();
    if (n_t < 1) throw validation_error("n_t must be >= 1");
    if (n_shot < 1) throw validation_error("n_shot must be >= 1");
    if (time_grid.empty()) throw validation_error("time_grid must not be empty");
    if (time_grid.front() < 0.0) throw validation_error("time_grid must be nonnegative");
    for (size_t i = 1; i < time_grid.size(); ++i) {
        if (time_grid[i] <= time_grid[i - 1]) {
            throw validation_error("time_grid must be strictly increasing");
        }
    }
    if (mass_grid.empty()) throw validation_error("mass_grid must not be empty");
    if (mass_grid.front() <= 0.0) throw validation_error("mass_grid must be positive");
    for (size_t i = 1; i < mass_grid.size(); ++i) {
        if (mass_grid[i] <= mass_grid[i - 1]) {
            throw validation_error("mass_grid must be strictly increasing");
        }
    }
    if (modes.empty()) throw validation_error("at least one run mode is required");
    for (double mprime : mass_grid) {
        const FitWindow w = window_for(mprime);
        if (!(w.t_min < w.t_max)) throw validation_error("fit window must be a proper interval");
        if (w.t_min < time_grid.front() - 1e-9 || w.t_max > time_grid.back() + 1e-9) {
            throw validation_error("fit window for m' = " + format_mass(mprime) +
                                   " lies outside the time grid span");
        }
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw validation_error("config key '" + key + "': cannot parse number '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const unsigned long long x = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw validation_error("config key '" + key + "': cannot parse integer '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw validation_error("config key '" + key + "': cannot parse boolean '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

FitWindow parse_window(const std::string& key, const std::string& value) {
    const auto colon = value.find(':');
    if (colon == std::string::npos) {
        throw validation_error("config key '" + key + "': window must look like 0.15:0.40");
    }
    return {parse_double(key, trim(value.substr(0, colon))),
            parse_double(key, trim(value.substr(colon + 1)))};
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config = default_config();
    bool explicit_time_grid = false;
    double time_start = 0.0, time_step = 0.05;
    int time_count = 10;
    bool have_series = false;

    std::string section;
    std::stringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw validation_error("config line " + std::to_string(line_no) +
                                       ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw validation_error("config line " + std::to_string(line_no) +
                                   ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string qualified = section.empty() ? key : section + "." + key;

        if (qualified == "lattice.m") {
            config.lattice.m = parse_double(qualified, value);
        } else if (qualified == "lattice.eE") {
            config.lattice.eE = parse_double(qualified, value);
        } else if (qualified == "lattice.a") {
            config.lattice.a = parse_double(qualified, value);
        } else if (qualified == "lattice.n_sites") {
            config.lattice.n_sites = static_cast<int>(parse_u64(qualified, value));
            config.lattice.n_full = 2 * config.lattice.n_sites;
        } else if (qualified == "grids.mass_grid") {
            config.mass_grid.clear();
            for (const auto& item : split_list(value)) {
                config.mass_grid.push_back(parse_double(qualified, item));
            }
        } else if (qualified == "grids.time_grid") {
            config.time_grid.clear();
            for (const auto& item : split_list(value)) {
                config.time_grid.push_back(parse_double(qualified, item));
            }
            explicit_time_grid = true;
        } else if (qualified == "grids.time_start") {
            time_start = parse_double(qualified, value);
            have_series = true;
        } else if (qualified == "grids.time_step") {
            time_step = parse_double(qualified, value);
            have_series = true;
        } else if (qualified == "grids.time_count") {
            time_count = static_cast<int>(parse_u64(qualified, value));
            have_series = true;
        } else if (qualified == "run.n_t") {
            config.n_t = static_cast<int>(parse_u64(qualified, value));
        } else if (qualified == "run.n_shot") {
            config.n_shot = parse_u64(qualified, value);
        } else if (qualified == "run.seed") {
            config.seed = parse_u64(qualified, value);
        } else if (qualified == "run.convention") {
            if (value == "literal") {
                config.convention = RateConvention::Literal;
            } else if (value == "paper") {
                config.convention = RateConvention::PaperMatch;
            } else {
                throw validation_error("run.convention must be 'literal' or 'paper'");
            }
        } else if (qualified == "run.modes") {
            config.modes.clear();
            for (const auto& item : split_list(value)) {
                config.modes.push_back(mode_from_name(item));
            }
        } else if (qualified == "noise.p_cnot") {
            config.noise.p_cnot = parse_double(qualified, value);
        } else if (qualified == "noise.p_readout") {
            config.noise.p_readout = parse_double(qualified, value);
        } else if (qualified == "fit.maintext_window_m14") {
            config.maintext_window_m14 = parse_bool(qualified, value);
        } else if (section == "fit" && key.rfind("window_", 0) == 0) {
            const std::string mass_key = key.substr(7);
            config.window_overrides[format_mass(parse_double(qualified, mass_key))] =
                parse_window(qualified, value);
        } else {
            throw validation_error("unknown config key '" + qualified + "'");
        }
    }

    if (!explicit_time_grid && have_series) {
        if (time_count < 1) throw validation_error("grids.time_count must be >= 1");
        config.time_grid.resize(static_cast<size_t>(time_count));
        for (int i = 0; i < time_count; ++i) {
            config.time_grid[static_cast<size_t>(i)] = time_start + i * time_step;
        }
    }
    config.validate();
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace schwinger
