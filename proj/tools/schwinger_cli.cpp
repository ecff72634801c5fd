// Command-line front end for the pair-production pipeline. Subcommands map
// onto the library stages so any intermediate artifact can be produced on its
// own: analytic rates, Hamiltonian dumps, VQE angles, decay curves, fits,
// rate tables, and the full reproduction run.
//
// Exit codes: 0 success, 1 invalid input or configuration, 2 numerical
// failure (non-convergence, empty post-selection, ...).

#include "schwinger/analytic.hpp"
#include "schwinger/config.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/io.hpp"
#include "schwinger/lattice.hpp"
#include "schwinger/pipeline.hpp"
#include "schwinger/vqe.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace schwinger;

FitWindow parse_window(const std::string& text) {
    double a = 0.0, b = 0.0;
    if (std::sscanf(text.c_str(), "%lf:%lf", &a, &b) != 2 || b <= a) {
        throw validation_error("window must be 'T_MIN:T_MAX' with T_MIN < T_MAX, got '" +
                               text + "'");
    }
    return FitWindow{a, b};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        write_file(out_path, text);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Schwinger pair production on a staggered five-qubit lattice"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed, shots;
    std::optional<int> n_t;
    std::optional<double> p_cnot, p_readout;
    std::optional<std::string> convention;
    app.add_option("--config", config_path, "INI configuration file (default: benchmark)");
    app.add_option("--seed", seed, "master RNG seed");
    app.add_option("--shots", shots, "shots per time point");
    app.add_option("--nt", n_t, "Trotter steps per time point");
    app.add_option("--p-cnot", p_cnot, "two-qubit depolarizing rate per CNOT");
    app.add_option("--p-readout", p_readout, "per-bit readout flip rate");
    app.add_option("--convention", convention,
                   "reported 3+1D convention: 'literal' or 'paper'");

    auto* analytic_cmd = app.add_subcommand(
        "analytic", "closed-form 1+1D rates on the mass grid and their 3+1D integral");
    std::vector<double> analytic_masses;
    analytic_cmd->add_option("--mprime", analytic_masses,
                             "effective masses (default: config mass grid)")
        ->delimiter(',');

    auto* ham_cmd = app.add_subcommand("hamiltonian", "dump the spin Hamiltonian terms");
    std::string sector_name = "even";
    double ham_mass = -1.0;
    bool ham_split = false;
    ham_cmd->add_option("--sector", sector_name, "parity sector: even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    ham_cmd->add_option("--mprime", ham_mass, "effective mass (default: config bare mass)");
    ham_cmd->add_flag("--split", ham_split, "print the three Trotter groups separately");

    auto* vqe_cmd = app.add_subcommand("vqe", "optimize the vacuum ansatz at eE = 0");
    std::vector<double> vqe_masses;
    std::string vqe_out;
    vqe_cmd->add_option("--mprime", vqe_masses,
                        "effective masses (default: config mass grid)")
        ->delimiter(',');
    vqe_cmd->add_option("--out", vqe_out, "write JSON here instead of stdout");

    auto* curve_cmd = app.add_subcommand("curve", "vacuum persistence curve for one mass");
    double curve_mass = 1.0;
    std::string curve_mode = "noiseless", curve_out;
    curve_cmd->add_option("--mprime", curve_mass, "effective mass")->required();
    curve_cmd->add_option("--mode", curve_mode, "exact, noiseless, noisy or corrected");
    curve_cmd->add_option("--out", curve_out, "write CSV here instead of stdout");

    auto* fit_cmd = app.add_subcommand("fit", "run one curve and fit its decay rate");
    double fit_mass = 1.0;
    std::string fit_mode = "noiseless", fit_window_text, fit_out;
    fit_cmd->add_option("--mprime", fit_mass, "effective mass")->required();
    fit_cmd->add_option("--mode", fit_mode, "exact, noiseless, noisy or corrected");
    fit_cmd->add_option("--window", fit_window_text, "override fit window, 'T_MIN:T_MAX'");
    fit_cmd->add_option("--out", fit_out, "write JSON here instead of stdout");

    auto* rates_cmd =
        app.add_subcommand("rates", "full rate table for one or more run modes");
    std::vector<std::string> rates_modes;
    std::string rates_out;
    rates_cmd->add_option("--mode", rates_modes, "run modes (default: config modes)")
        ->delimiter(',');
    rates_cmd->add_option("--out", rates_out, "write JSON here instead of stdout");

    auto* bench_cmd =
        app.add_subcommand("benchmark", "full reproduction run with artifacts on disk");
    std::string bench_out = "out";
    bench_cmd->add_option("--out", bench_out, "artifact directory");

    CLI11_PARSE(app, argc, argv);

    ExperimentConfig config = config_path.empty() ? default_config() : load_config(config_path);
    if (seed) config.seed = *seed;
    if (shots) config.n_shot = *shots;
    if (n_t) config.n_t = *n_t;
    if (p_cnot) config.noise.p_cnot = *p_cnot;
    if (p_readout) config.noise.p_readout = *p_readout;
    if (convention) {
        if (*convention == "literal") {
            config.convention = RateConvention::Literal;
        } else if (*convention == "paper") {
            config.convention = RateConvention::PaperMatch;
        } else {
            throw validation_error("unknown convention '" + *convention + "'");
        }
    }
    config.validate();

    if (*analytic_cmd) {
        const std::vector<double>& masses =
            analytic_masses.empty() ? config.mass_grid : analytic_masses;
        std::map<double, double> gamma;
        for (double mprime : masses) {
            gamma[mprime] = analytic_rate_1p1(mprime, config.lattice.eE);
            std::printf("gamma_1p1(mprime = %.12g) = %.12g\n", mprime, gamma[mprime]);
        }
        if (gamma.size() >= 2) {
            std::printf("gamma_3p1 literal     = %.12g\n",
                        integrate_rates(gamma, RateConvention::Literal));
            std::printf("gamma_3p1 paper_match = %.12g\n",
                        integrate_rates(gamma, RateConvention::PaperMatch));
        }
        return 0;
    }

    if (*ham_cmd) {
        const ParitySector sector =
            sector_name == "even" ? ParitySector::Even : ParitySector::Odd;
        const LatticeParams lattice =
            ham_mass > 0.0 ? config.lattice.with_mass(ham_mass) : config.lattice;
        const PauliOperator h = build_parity_hamiltonian(sector, lattice);
        if (ham_split) {
            if (sector != ParitySector::Even) {
                throw validation_error("--split is defined for the even sector only");
            }
            const TrotterSplit split = split_trotter_terms(h, lattice);
            std::printf("# h1 (diagonal)\n%s", split.h1.dump().c_str());
            std::printf("# h2 (even-first hopping)\n%s", split.h2.dump().c_str());
            std::printf("# h3 (odd-first hopping)\n%s", split.h3.dump().c_str());
        } else {
            std::fputs(h.dump().c_str(), stdout);
        }
        return 0;
    }

    Pipeline pipeline(config);

    if (*vqe_cmd) {
        const std::vector<double>& masses =
            vqe_masses.empty() ? config.mass_grid : vqe_masses;
        std::string out;
        for (double mprime : masses) {
            out += vqe_record_to_json(mprime, config.lattice.a, pipeline.vqe_for(mprime));
        }
        emit(out, vqe_out);
        return 0;
    }

    if (*curve_cmd) {
        const DecaySeries series = pipeline.run_curve(curve_mass, mode_from_name(curve_mode));
        emit(series_to_csv(series), curve_out);
        return 0;
    }

    if (*fit_cmd) {
        const DecaySeries series = pipeline.run_curve(fit_mass, mode_from_name(fit_mode));
        std::optional<FitWindow> window;
        if (!fit_window_text.empty()) window = parse_window(fit_window_text);
        const MassRate row = pipeline.fit_series(series, window ? &*window : nullptr);
        RateTable table;
        table.mode = series.mode;
        table.volume = pipeline.volume();
        table.complete = row.ok;
        table.rows.push_back(row);
        // a single mass has no transverse integral
        const double nan = std::numeric_limits<double>::quiet_NaN();
        table.gamma_3p1_literal = nan;
        table.gamma_3p1_paper = nan;
        table.err_3p1_literal = nan;
        table.err_3p1_paper = nan;
        emit(rate_table_to_json(table, config.convention), fit_out);
        if (!row.ok) {
            throw numerical_error("fit failed for mprime = " + format_mass(fit_mass) + ": " +
                                  row.error);
        }
        return 0;
    }

    if (*rates_cmd) {
        if (!rates_modes.empty()) {
            config.modes.clear();
            for (const auto& name : rates_modes) config.modes.push_back(mode_from_name(name));
            pipeline = Pipeline(config);
        }
        std::map<RunMode, RateTable> tables;
        for (RunMode mode : pipeline.config().modes) tables[mode] = pipeline.run_mode(mode).table;
        emit(rate_tables_to_json(tables, config.convention), rates_out);
        return 0;
    }

    const std::map<RunMode, RateTable> tables = pipeline.run_benchmark(bench_out);
    for (const auto& [mode, table] : tables) {
        const double reported = config.convention == RateConvention::Literal
                                    ? table.gamma_3p1_literal
                                    : table.gamma_3p1_paper;
        std::printf("%-10s gamma_3p1 = %.12g%s\n", mode_name(mode), reported,
                    table.complete ? "" : "  (incomplete)");
    }
    std::printf("artifacts written to %s/\n", bench_out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const numerical_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
