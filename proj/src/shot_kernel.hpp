#pragma once

// Internal shot-loop kernel shared by the ideal and noisy samplers. Both call
// the same per-shot code path so that NoiseModel(0,0) is bit-identical to
// ideal sampling, and both drivers (serial / OpenMP) agree for any thread
// count because every shot derives its own generator from (seed, shot index).

#include "schwinger/circuit.hpp"
#include "schwinger/noise.hpp"

#include <cstdint>
#include <vector>

namespace schwinger::detail {

struct ShotPlan {
    const Circuit* circuit = nullptr;          // nullptr: sample prepared state directly
    const Eigen::VectorXcd* initial = nullptr; // circuit input (trajectory replays start here)
    const std::vector<double>* ideal_probs = nullptr;
    std::vector<int> cnot_positions;
    int qubit_count = 0;
    NoiseModel noise;
};

void run_shots(const ShotPlan& plan, std::uint64_t n_shot, std::uint64_t seed,
               std::vector<std::uint64_t>& histogram, bool parallel);

Counts finalize_counts(const std::vector<std::uint64_t>& histogram, int qubit_count);

}  // namespace schwinger::detail
