#pragma once

#include "schwinger/analytic.hpp"
#include "schwinger/fit.hpp"
#include "schwinger/lattice.hpp"
#include "schwinger/noise.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schwinger {

enum class RunMode { Exact, Noiseless, Noisy, Corrected };

const char* mode_name(RunMode mode);
RunMode mode_from_name(const std::string& name);

// Full experiment description. Defaults reproduce the benchmark: m = 1,
// eE = 20, a = 0.45, five qubits, six effective masses 1.0..2.0, ten time
// points 0..0.45, three Trotter steps, 8192 shots, 1% CNOT and readout noise.
struct ExperimentConfig {
    LatticeParams lattice;
    std::vector<double> mass_grid = {1.0, 1.2, 1.4, 1.6, 1.8, 2.0};
    std::vector<double> time_grid;  // filled by default_config()
    int n_t = 3;
    std::uint64_t n_shot = 8192;
    NoiseModel noise{0.01, 0.01};
    std::vector<RunMode> modes = {RunMode::Exact, RunMode::Noiseless, RunMode::Noisy,
                                  RunMode::Corrected};
    // Fit windows: per-mass overrides keyed by the %.12g-formatted mass;
    // unlisted masses use default_window().
    std::map<std::string, FitWindow> window_overrides;
    bool maintext_window_m14 = false;
    std::uint64_t seed = 7;
    RateConvention convention = RateConvention::PaperMatch;

    void validate() const;
    FitWindow window_for(double mprime) const;
};

// Published fit windows per effective mass; m' = 1.4 additionally has the
// main-text (0.10, 0.45) variant behind the flag. Masses outside the table
// fall back to (0.15, 0.40). Intervals are open (see FitWindow).
FitWindow default_window(double mprime, bool maintext_variant_m14 = false);

ExperimentConfig default_config();

// Key/value configuration file with [section] headers, # or ; comments.
// Unknown keys are rejected. Every field defaults to the benchmark value.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text);

// Canonical key for window_overrides and output file names.
std::string format_mass(double mprime);

}  // namespace schwinger
