#pragma once

#include "schwinger/circuit.hpp"
#include "schwinger/pauli.hpp"
#include "schwinger/statevector.hpp"

#include <array>
#include <cstdint>

namespace schwinger {

// The 9 ansatz angles: theta[0..3] drive the four entangling CNOT-CRy-CNOT
// blocks on pairs (0,1), (2,3), (1,2), (3,4) in that order; theta[4..8] are
// the five Rz angles inserted between the two block layers. The optimizer
// clamps every angle to [-2 pi, 2 pi].
struct AnsatzParams {
    std::array<double, 9> theta{};
};

// Charge-conserving 5-qubit preparation circuit: blocks (0,1) and (2,3), the
// Rz layer on all qubits, then blocks (1,2) and (3,4). theta = 0 acts as the
// identity on any basis state. Applied to |10101> it spans (part of) the
// weight-3 sector.
Circuit ansatz_circuit(const AnsatzParams& params);

// <10101| U(theta)^dag h0 U(theta) |10101>, evaluated exactly on the
// statevector (no shot noise during optimization).
double vqe_energy(const AnsatzParams& params, const PauliOperator& h0);

// U(theta)|10101>.
Statevector ansatz_state(const AnsatzParams& params);

struct VqeOptions {
    int restarts = 8;            // restart 0 starts at theta = 0, the rest jitter
    int max_evaluations = 40000; // per restart
    double f_tolerance = 1e-12;  // simplex spread stop
    double x_tolerance = 1e-9;
    double jitter = 0.5;         // uniform(-jitter, jitter) initial offsets
    std::uint64_t seed = 17;
};

struct VqeResult {
    AnsatzParams params;
    double energy = 0.0;
    double fidelity = 0.0;  // against exact_ground_state(h0, 0)
    bool converged = false; // fidelity >= 0.99 reached
    int evaluations = 0;    // across all restarts
};

// Multi-start Nelder-Mead minimization of vqe_energy. Deterministic under a
// fixed seed and independent of thread count (restarts run in parallel, the
// reduction is by energy with restart index as tie-break). A run that never
// reaches fidelity 0.99 is reported via converged = false and the best
// fidelity found, so callers can degrade gracefully instead of aborting.
VqeResult optimize_vqe(const PauliOperator& h0, const AnsatzParams& init,
                       const VqeOptions& options = {});

// Lowest eigenvector of h restricted to the charge-`sector` subspace
// (Hamming weight = vacuum weight + sector), embedded back into the full
// space and phase-fixed so its largest-magnitude amplitude is real positive.
// Throws numerical_error if the restricted ground level is degenerate within
// 1e-10.
Statevector exact_ground_state(const PauliOperator& h, int sector = 0);

}  // namespace schwinger
