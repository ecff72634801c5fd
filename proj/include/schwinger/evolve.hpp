#pragma once

#include "schwinger/circuit.hpp"
#include "schwinger/lattice.hpp"
#include "schwinger/pauli.hpp"
#include "schwinger/statevector.hpp"

#include <Eigen/Dense>

namespace schwinger {

// exp(-i H t) via dense eigendecomposition, with the eigensystem computed
// once per Hamiltonian and reused across t values.
class ExactEvolver {
public:
    explicit ExactEvolver(const PauliOperator& h, int max_qubits = 12);

    Statevector evolve(double t, const Statevector& state) const;

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

private:
    int qubit_count_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

// One-shot convenience wrapper.
Statevector evolve_exact(const PauliOperator& h, double t, const Statevector& state);

// One first-order Trotter step exp(-i h1 dt) exp(-i h2 dt) exp(-i h3 dt) as a
// circuit: each hopping pair becomes a CNOT-CRx-CNOT block (the CRx angle is
// 4 * coeff * dt for per-string coefficient coeff, verified against the dense
// two-qubit exponential), each Z term an Rz. The identity component of h1 is
// a global phase and is not representable as a gate here; evolve_trotter
// accounts for it.
Circuit trotter_step_circuit(const TrotterSplit& split, double dt);

// Applies trotter_step_circuit(split, t / n_t) n_t times, then the identity
// phase, so the result converges to evolve_exact including global phase.
Statevector evolve_trotter(const TrotterSplit& split, double t, int n_t,
                           const Statevector& state);

}  // namespace schwinger
