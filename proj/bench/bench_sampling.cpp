// Timing harness for the shot loops: OpenMP kernels against their serial
// reference on the benchmark's end-to-end circuit, plus VQE throughput.
// Both variants must produce identical histograms; the run aborts if not.

#include "schwinger/circuit.hpp"
#include "schwinger/config.hpp"
#include "schwinger/noise.hpp"
#include "schwinger/pipeline.hpp"
#include "schwinger/sampling.hpp"
#include "schwinger/vqe.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const double elapsed = seconds_since(start);
        if (elapsed < best) best = elapsed;
    }
    return best;
}

void report(const char* label, std::uint64_t shots, double serial_s, double parallel_s) {
    std::printf("%-22s %10llu shots  serial %8.3f s (%10.0f/s)  parallel %8.3f s (%10.0f/s)  speedup %.2fx\n",
                label, static_cast<unsigned long long>(shots), serial_s, shots / serial_s,
                parallel_s, shots / parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace schwinger;

    std::uint64_t ideal_shots = 2'000'000;
    std::uint64_t noisy_shots = 200'000;
    if (argc > 1) ideal_shots = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) noisy_shots = std::strtoull(argv[2], nullptr, 10);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled: both columns run the serial loop\n");
#endif

    const ExperimentConfig config = default_config();
    Pipeline pipeline(config);
    const Circuit circuit = pipeline.end_to_end_circuit(1.4, 0.3);
    const Statevector vacuum = Statevector::basis(vacuum_bits(config.lattice.n_sites));
    Statevector out = vacuum;
    apply(out, circuit);

    const std::uint64_t seed = 42;
    Counts serial_counts, parallel_counts;
    const double ideal_serial = time_best_of(3, [&] {
        serial_counts = sample_serial(out, ideal_shots, seed);
    });
    const double ideal_parallel = time_best_of(3, [&] {
        parallel_counts = sample(out, ideal_shots, seed);
    });
    if (serial_counts.histogram != parallel_counts.histogram) {
        std::fprintf(stderr, "FATAL: sample() and sample_serial() disagree\n");
        return 1;
    }
    report("sample (ideal)", ideal_shots, ideal_serial, ideal_parallel);

    const double noisy_serial = time_best_of(3, [&] {
        serial_counts = sample_noisy_serial(circuit, vacuum, noisy_shots, config.noise, seed);
    });
    const double noisy_parallel = time_best_of(3, [&] {
        parallel_counts = sample_noisy(circuit, vacuum, noisy_shots, config.noise, seed);
    });
    if (serial_counts.histogram != parallel_counts.histogram) {
        std::fprintf(stderr, "FATAL: sample_noisy() and sample_noisy_serial() disagree\n");
        return 1;
    }
    report("sample_noisy (1% eps)", noisy_shots, noisy_serial, noisy_parallel);

    const LatticeParams free_lattice = config.lattice.with_mass(1.4).with_field(0.0);
    const PauliOperator h0 = build_parity_hamiltonian(ParitySector::Even, free_lattice);
    VqeResult vqe;
    const auto start = std::chrono::steady_clock::now();
    vqe = optimize_vqe(h0, AnsatzParams{});
    const double vqe_s = seconds_since(start);
    std::printf("%-22s %10d evals  %8.3f s (%10.0f/s)  fidelity %.6f\n", "optimize_vqe",
                vqe.evaluations, vqe_s, vqe.evaluations / vqe_s, vqe.fidelity);

    return 0;
}
