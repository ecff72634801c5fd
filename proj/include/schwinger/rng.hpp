#pragma once

#include <cstdint>
#include <string_view>

namespace schwinger {

// SplitMix64: tiny, fast, platform-independent generator. We deliberately do
// not use std::mt19937 / std::uniform_real_distribution because their exact
// output is not pinned by the standard across library implementations, and
// the artifact promises bit-identical reruns.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Multiply-high method; the modulo bias is
    // below 2^-32 for the small bounds used here (<= 16).
    std::uint32_t uniform_int(std::uint32_t bound) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

// Deterministically derive an independent child seed from (master, stream).
// Used to give every shot / restart / pipeline job its own generator so that
// results do not depend on how work is partitioned across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master ^ (stream + 0x9e3779b97f4a7c15ULL + (master << 6) + (master >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a hash of a tag string, for naming job streams like "noisy/1.4/0.35".
inline std::uint64_t hash_tag(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    return derive_seed(master, hash_tag(tag));
}

}  // namespace schwinger
