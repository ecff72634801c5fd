#pragma once

#include "schwinger/statevector.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace schwinger {

// Measurement outcomes of repeated shots in the computational basis.
struct Counts {
    int qubit_count = 0;
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> histogram;

    std::uint64_t count(const std::string& bits) const {
        const auto it = histogram.find(bits);
        return it == histogram.end() ? 0 : it->second;
    }
};

// Draw n_shot i.i.d. outcomes from |amplitudes|^2 with a seeded, reproducible
// generator. Every shot owns a generator derived from (seed, shot index), so
// the result is independent of how shots are partitioned across threads;
// sample() runs the shot loop in parallel when OpenMP is enabled, and
// sample_serial() is the plain-loop reference used by tests and benchmarks.
Counts sample(const Statevector& state, std::uint64_t n_shot, std::uint64_t seed);
Counts sample_serial(const Statevector& state, std::uint64_t n_shot, std::uint64_t seed);

}  // namespace schwinger
