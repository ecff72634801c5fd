#include "schwinger/sampling.hpp"

#include "schwinger/errors.hpp"
#include "schwinger/rng.hpp"
#include "shot_kernel.hpp"

#include <complex>

namespace schwinger {

namespace detail {

namespace {

// One shot: draw CNOT errors, replay the trajectory if any fired, draw the
// outcome from the resulting distribution, then apply readout flips.
// RNG draw order per shot (pinned; changing it breaks stored seeds):
//   1. one uniform per CNOT, plus one integer draw per triggered error;
//   2. one uniform for the measurement outcome;
//   3. one uniform per qubit for readout flips (only if p_readout > 0).
std::size_t run_one_shot(const ShotPlan& plan, SplitMix64& rng, Eigen::VectorXcd& scratch,
                         std::vector<double>& scratch_probs,
                         std::vector<std::pair<int, int>>& errors) {
    static constexpr char kPauli[] = "IXYZ";
    const int nq = plan.qubit_count;

    errors.clear();
    if (plan.noise.p_cnot > 0.0 && plan.circuit != nullptr) {
        for (int gate_index : plan.cnot_positions) {
            if (rng.uniform() < plan.noise.p_cnot) {
                errors.emplace_back(gate_index, 1 + static_cast<int>(rng.uniform_int(15)));
            }
        }
    }

    const std::vector<double>* probs = plan.ideal_probs;
    if (!errors.empty()) {
        scratch = *plan.initial;
        std::size_t next_error = 0;
        const auto& gates = plan.circuit->gates;
        for (std::size_t gi = 0; gi < gates.size(); ++gi) {
            apply_gate_unchecked(scratch, nq, gates[gi]);
            while (next_error < errors.size() &&
                   errors[next_error].first == static_cast<int>(gi)) {
                const int v = errors[next_error].second;  // 1..15, high bits = control qubit
                apply_pauli(scratch, nq, gates[gi].q0, kPauli[v >> 2]);
                apply_pauli(scratch, nq, gates[gi].q1, kPauli[v & 3]);
                ++next_error;
            }
        }
        for (Eigen::Index i = 0; i < scratch.size(); ++i) {
            scratch_probs[static_cast<size_t>(i)] = std::norm(scratch[i]);
        }
        probs = &scratch_probs;
    }

    const double u = rng.uniform();
    std::size_t outcome = probs->size() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probs->size(); ++i) {
        cumulative += (*probs)[i];
        if (u < cumulative) {
            outcome = i;
            break;
        }
    }

    if (plan.noise.p_readout > 0.0) {
        for (int q = 0; q < nq; ++q) {
            if (rng.uniform() < plan.noise.p_readout) {
                outcome ^= std::size_t(1) << (nq - 1 - q);
            }
        }
    }
    return outcome;
}

}  // namespace

void run_shots(const ShotPlan& plan, std::uint64_t n_shot, std::uint64_t seed,
               std::vector<std::uint64_t>& histogram, bool parallel) {
    const std::size_t dim = std::size_t(1) << plan.qubit_count;
    histogram.assign(dim, 0);

    if (parallel) {
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(dim, 0);
            Eigen::VectorXcd scratch(static_cast<Eigen::Index>(dim));
            std::vector<double> scratch_probs(dim);
            std::vector<std::pair<int, int>> errors;
            errors.reserve(plan.cnot_positions.size());
#pragma omp for schedule(static)
            for (long long shot = 0; shot < static_cast<long long>(n_shot); ++shot) {
                SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(shot)));
                ++local[run_one_shot(plan, rng, scratch, scratch_probs, errors)];
            }
#pragma omp critical(schwinger_merge_counts)
            for (std::size_t i = 0; i < dim; ++i) histogram[i] += local[i];
        }
    } else {
        Eigen::VectorXcd scratch(static_cast<Eigen::Index>(dim));
        std::vector<double> scratch_probs(dim);
        std::vector<std::pair<int, int>> errors;
        errors.reserve(plan.cnot_positions.size());
        for (std::uint64_t shot = 0; shot < n_shot; ++shot) {
            SplitMix64 rng(derive_seed(seed, shot));
            ++histogram[run_one_shot(plan, rng, scratch, scratch_probs, errors)];
        }
    }
}

Counts finalize_counts(const std::vector<std::uint64_t>& histogram, int qubit_count) {
    Counts counts;
    counts.qubit_count = qubit_count;
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        if (histogram[i] == 0) continue;
        counts.histogram[index_to_bits(i, qubit_count)] = histogram[i];
        counts.total += histogram[i];
    }
    return counts;
}

}  // namespace detail

namespace {

Counts sample_impl(const Statevector& state, std::uint64_t n_shot, std::uint64_t seed,
                   bool parallel) {
    if (n_shot < 1) throw validation_error("n_shot must be >= 1");
    state.check_norm();
    const std::vector<double> probs = probability_vector(state);

    detail::ShotPlan plan;
    plan.ideal_probs = &probs;
    plan.qubit_count = state.qubit_count();

    std::vector<std::uint64_t> histogram;
    detail::run_shots(plan, n_shot, seed, histogram, parallel);
    return detail::finalize_counts(histogram, state.qubit_count());
}

}  // namespace

Counts sample(const Statevector& state, std::uint64_t n_shot, std::uint64_t seed) {
    return sample_impl(state, n_shot, seed, true);
}

Counts sample_serial(const Statevector& state, std::uint64_t n_shot, std::uint64_t seed) {
    return sample_impl(state, n_shot, seed, false);
}

}  // namespace schwinger
