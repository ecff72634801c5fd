#include "schwinger/pipeline.hpp"

#include "schwinger/errors.hpp"
#include "schwinger/evolve.hpp"
#include "schwinger/io.hpp"
#include "schwinger/rng.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace schwinger {

std::vector<FitPoint> DecaySeries::fit_points() const {
    std::vector<FitPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back({p.t, p.pvac, p.std_error});
    return pts;
}

Pipeline::Pipeline(ExperimentConfig config) : config_(std::move(config)) {
    config_.validate();
}

std::uint64_t Pipeline::sampling_seed(const char* kind, double mprime, double t) const {
    char tag[96];
    std::snprintf(tag, sizeof tag, "%s/%.17g/%.17g", kind, mprime, t);
    return derive_seed(config_.seed, tag);
}

const VqeResult& Pipeline::vqe_for(double mprime) {
    const std::string key = format_mass(mprime);
    const auto it = vqe_cache_.find(key);
    if (it != vqe_cache_.end()) return it->second;

    const LatticeParams free_lattice = config_.lattice.with_mass(mprime).with_field(0.0);
    const PauliOperator h0 = build_parity_hamiltonian(ParitySector::Even, free_lattice);
    VqeOptions options;
    options.seed = derive_seed(config_.seed, "vqe/" + key);
    const VqeResult result = optimize_vqe(h0, AnsatzParams{}, options);
    return vqe_cache_.emplace(key, result).first->second;
}

Circuit Pipeline::end_to_end_circuit(double mprime, double t) {
    const VqeResult& vqe = vqe_for(mprime);
    const LatticeParams lattice = config_.lattice.with_mass(mprime);
    const PauliOperator h = build_parity_hamiltonian(ParitySector::Even, lattice);
    const TrotterSplit split = split_trotter_terms(h, lattice);

    Circuit circuit = ansatz_circuit(vqe.params);
    const Circuit step = trotter_step_circuit(split, t / config_.n_t);
    for (int k = 0; k < config_.n_t; ++k) circuit.append(step);
    circuit.append(ansatz_circuit(vqe.params).inverse());
    return circuit;
}

DecaySeries Pipeline::run_curve(double mprime, RunMode mode) {
    if (mprime <= 0.0) throw validation_error("mprime must be > 0");
    DecaySeries series;
    series.mprime = mprime;
    series.mode = mode;

    const LatticeParams lattice = config_.lattice.with_mass(mprime);

    if (mode == RunMode::Exact) {
        const PauliOperator h = build_parity_hamiltonian(ParitySector::Even, lattice);
        const PauliOperator h0 =
            build_parity_hamiltonian(ParitySector::Even, lattice.with_field(0.0));
        const Statevector omega = exact_ground_state(h0, 0);
        const ExactEvolver evolver(h);
        for (double t : config_.time_grid) {
            series.points.push_back({t, fidelity(omega, evolver.evolve(t, omega)), 0.0});
        }
        return series;
    }

    const VqeResult& vqe = vqe_for(mprime);
    series.vqe_fidelity = vqe.fidelity;
    series.degraded = !vqe.converged;

    const PauliOperator h = build_parity_hamiltonian(ParitySector::Even, lattice);
    const TrotterSplit split = split_trotter_terms(h, lattice);
    const Circuit prep = ansatz_circuit(vqe.params);
    const Circuit unprep = prep.inverse();
    const Statevector reference = Statevector::basis(vacuum_bits(lattice.n_sites));

    for (double t : config_.time_grid) {
        Circuit circuit = prep;
        const Circuit step = trotter_step_circuit(split, t / config_.n_t);
        for (int k = 0; k < config_.n_t; ++k) circuit.append(step);
        circuit.append(unprep);

        PvacEstimate estimate;
        if (mode == RunMode::Noiseless) {
            Statevector out = reference;
            apply(out, circuit);
            estimate = pvac(sample(out, config_.n_shot, sampling_seed("ideal", mprime, t)));
        } else {
            const Counts counts = sample_noisy(circuit, reference, config_.n_shot,
                                               config_.noise,
                                               sampling_seed("noisy", mprime, t));
            estimate = mode == RunMode::Corrected ? pvac(post_select(counts)) : pvac(counts);
        }
        series.points.push_back({t, estimate.value, estimate.std_error});
    }
    return series;
}

MassRate Pipeline::fit_series(const DecaySeries& series, const FitWindow* window_override) {
    MassRate row;
    row.mprime = series.mprime;
    row.window = window_override ? *window_override : config_.window_for(series.mprime);
    row.degraded = series.degraded;
    try {
        row.fit = fit_decay(series.fit_points(), row.window, volume());
        if (row.fit.gamma < 0.0) {
            throw numerical_error("fitted rate is negative");
        }
        row.ok = true;
        row.c1_in_range = row.fit.c1 > 0.0 && row.fit.c1 <= 1.5;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

ModeRun Pipeline::run_mode(RunMode mode) {
    ModeRun run;
    run.table.mode = mode;
    run.table.volume = volume();

    for (double mprime : config_.mass_grid) {
        MassRate row;
        row.mprime = mprime;
        row.window = config_.window_for(mprime);
        try {
            DecaySeries series = run_curve(mprime, mode);
            row = fit_series(series);
            run.series.push_back(std::move(series));
        } catch (const std::exception& e) {
            // One failed mass must not abort the others.
            row.ok = false;
            row.error = e.what();
        }
        run.table.rows.push_back(std::move(row));
    }

    run.table.complete = true;
    std::map<double, double> gamma, var;
    for (const auto& row : run.table.rows) {
        if (row.ok) {
            gamma[row.mprime] = row.fit.gamma;
            var[row.mprime] = row.fit.var_gamma;
        } else {
            run.table.complete = false;
        }
    }
    if (gamma.size() >= 2) {
        run.table.gamma_3p1_literal = integrate_rates(gamma, RateConvention::Literal);
        run.table.gamma_3p1_paper = integrate_rates(gamma, RateConvention::PaperMatch);
        run.table.err_3p1_literal =
            std::sqrt(integrate_rates_variance(var, RateConvention::Literal));
        run.table.err_3p1_paper =
            std::sqrt(integrate_rates_variance(var, RateConvention::PaperMatch));
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        run.table.gamma_3p1_literal = nan;
        run.table.gamma_3p1_paper = nan;
        run.table.err_3p1_literal = nan;
        run.table.err_3p1_paper = nan;
    }
    return run;
}

std::map<RunMode, RateTable> Pipeline::run_benchmark(const std::string& out_dir) {
    std::map<RunMode, RateTable> tables;

    bool needs_vqe = false;
    for (RunMode mode : config_.modes) needs_vqe |= mode != RunMode::Exact;
    if (needs_vqe) {
        for (double mprime : config_.mass_grid) {
            const VqeResult& result = vqe_for(mprime);
            write_file(out_dir + "/vqe/vqe_" + format_mass(mprime) + ".json",
                       vqe_record_to_json(mprime, config_.lattice.a, result));
        }
    }

    for (RunMode mode : config_.modes) {
        ModeRun run = run_mode(mode);
        for (const auto& series : run.series) {
            write_file(out_dir + "/curves/" + std::string(mode_name(mode)) + "_" +
                           format_mass(series.mprime) + ".csv",
                       series_to_csv(series));
        }
        tables[mode] = std::move(run.table);
    }

    write_file(out_dir + "/rates.json", rate_tables_to_json(tables, config_.convention));
    write_file(out_dir + "/meta.json", meta_to_json(config_));
    return tables;
}

std::map<RunMode, RateTable> run_benchmark(const ExperimentConfig& config,
                                           const std::string& out_dir) {
    Pipeline pipeline(config);
    return pipeline.run_benchmark(out_dir);
}

}  // namespace schwinger
