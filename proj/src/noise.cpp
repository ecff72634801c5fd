#include "schwinger/noise.hpp"

#include "schwinger/errors.hpp"
#include "schwinger/lattice.hpp"
#include "shot_kernel.hpp"

#include <cmath>

namespace schwinger {

void NoiseModel::validate() const {
    if (!(p_cnot >= 0.0 && p_cnot <= 1.0) || !(p_readout >= 0.0 && p_readout <= 1.0)) {
        throw validation_error("noise probabilities must lie in [0, 1]");
    }
}

namespace {

Counts sample_noisy_impl(const Circuit& circuit, const Statevector& initial,
                         std::uint64_t n_shot, const NoiseModel& noise, std::uint64_t seed,
                         bool parallel) {
    if (n_shot < 1) throw validation_error("n_shot must be >= 1");
    noise.validate();
    if (circuit.qubit_count != initial.qubit_count()) {
        throw validation_error("circuit and initial state qubit counts differ");
    }

    Statevector prepared = initial;
    apply(prepared, circuit);
    const std::vector<double> probs = probability_vector(prepared);

    detail::ShotPlan plan;
    plan.circuit = &circuit;
    plan.initial = &initial.amplitudes();
    plan.ideal_probs = &probs;
    plan.qubit_count = initial.qubit_count();
    plan.noise = noise;
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        if (circuit.gates[i].kind == GateKind::Cnot) {
            plan.cnot_positions.push_back(static_cast<int>(i));
        }
    }

    std::vector<std::uint64_t> histogram;
    detail::run_shots(plan, n_shot, seed, histogram, parallel);
    return detail::finalize_counts(histogram, initial.qubit_count());
}

}  // namespace

Counts sample_noisy(const Circuit& circuit, const Statevector& initial, std::uint64_t n_shot,
                    const NoiseModel& noise, std::uint64_t seed) {
    return sample_noisy_impl(circuit, initial, n_shot, noise, seed, true);
}

Counts sample_noisy_serial(const Circuit& circuit, const Statevector& initial,
                           std::uint64_t n_shot, const NoiseModel& noise, std::uint64_t seed) {
    return sample_noisy_impl(circuit, initial, n_shot, noise, seed, false);
}

Counts post_select(const Counts& counts) {
    Counts kept;
    kept.qubit_count = counts.qubit_count;
    for (const auto& [bits, n] : counts.histogram) {
        if (charge_weight(bits, counts.qubit_count) == 0) {
            kept.histogram[bits] = n;
            kept.total += n;
        }
    }
    if (kept.total == 0) {
        throw empty_post_selection("no shots left in the physical charge sector");
    }
    return kept;
}

PvacEstimate pvac(const Counts& counts) {
    if (counts.total == 0) throw validation_error("pvac of zero total shots");
    const std::string vacuum = vacuum_bits(counts.qubit_count);
    const double p =
        static_cast<double>(counts.count(vacuum)) / static_cast<double>(counts.total);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(counts.total))};
}

}  // namespace schwinger
