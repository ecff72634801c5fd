#pragma once

#include "schwinger/circuit.hpp"
#include "schwinger/sampling.hpp"
#include "schwinger/statevector.hpp"

#include <cstdint>

namespace schwinger {

// Hardware-style noise: each CNOT suffers two-qubit depolarizing noise (one
// of the 15 non-identity Pauli pairs, equiprobable) with probability p_cnot;
// each measured bit flips independently with probability p_readout.
// NoiseModel(0, 0) reproduces ideal sampling bit-exactly under equal seeds.
struct NoiseModel {
    double p_cnot = 0.0;
    double p_readout = 0.0;

    void validate() const;
    bool ideal() const { return p_cnot == 0.0 && p_readout == 0.0; }
};

// Monte-Carlo trajectory sampling of `circuit` applied to `initial`: per
// shot, Pauli errors are drawn after each CNOT and readout flips at the end.
// Shots with no CNOT error reuse the precomputed ideal distribution, so the
// cost scales with the error rate. sample_noisy runs shots in parallel when
// OpenMP is enabled; sample_noisy_serial is the reference loop. Both produce
// identical results for any thread count (per-shot derived seeds).
Counts sample_noisy(const Circuit& circuit, const Statevector& initial, std::uint64_t n_shot,
                    const NoiseModel& noise, std::uint64_t seed);
Counts sample_noisy_serial(const Circuit& circuit, const Statevector& initial,
                           std::uint64_t n_shot, const NoiseModel& noise, std::uint64_t seed);

// Keep only outcomes in the physical charge sector (Hamming weight equal to
// the reference vacuum's). Throws empty_post_selection if nothing survives.
Counts post_select(const Counts& counts);

struct PvacEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Vacuum-persistence estimate: frequency of the |1010...> pattern plus its
// binomial standard error sqrt(p (1-p) / total).
PvacEstimate pvac(const Counts& counts);

}  // namespace schwinger
