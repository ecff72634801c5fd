#include "schwinger/evolve.hpp"

#include "schwinger/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace schwinger {

ExactEvolver::ExactEvolver(const PauliOperator& h, int max_qubits)
    : qubit_count_(h.qubit_count()) {
    const Eigen::MatrixXcd dense = to_dense(h, max_qubits);
    const double herm_defect = (dense - dense.adjoint()).norm();
    if (herm_defect > 1e-12 * std::max(1.0, dense.norm())) {
        throw numerical_error("Hamiltonian is not Hermitian (defect " +
                              std::to_string(herm_defect) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Statevector ExactEvolver::evolve(double t, const Statevector& state) const {
    if (state.qubit_count() != qubit_count_) {
        throw validation_error("evolver and state qubit counts differ");
    }
    const Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * state.amplitudes();
    Eigen::VectorXcd phased(coeffs.size());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        phased[k] = coeffs[k] * std::polar(1.0, -eigenvalues_[k] * t);
    }
    Statevector out(qubit_count_);
    out.amplitudes() = eigenvectors_ * phased;
    out.check_norm(1e-10);
    return out;
}

Statevector evolve_exact(const PauliOperator& h, double t, const Statevector& state) {
    return ExactEvolver(h).evolve(t, state);
}

Circuit trotter_step_circuit(const TrotterSplit& split, double dt) {
    if (!std::isfinite(dt)) throw validation_error("dt must be finite");
    const int nq = split.h1.qubit_count();
    Circuit circuit;
    circuit.qubit_count = nq;

    // exp(-i w (XX + YY) dt) on an adjacent pair, where w is the per-string
    // coefficient: CNOT(i->j), CRx(4 w dt) controlled by j acting on i, CNOT.
    // Emitting h3 blocks first, then h2, then the Rz layer gives a circuit
    // whose matrix is exp(-i h1 dt) exp(-i h2 dt) exp(-i h3 dt).
    auto emit_hopping = [&](const PauliOperator& group) {
        for (const auto& term : group.terms()) {
            if (term.factors.find('X') == std::string::npos) continue;  // one block per XX/YY pair
            const int i = static_cast<int>(term.factors.find('X'));
            const int j = i + 1;
            std::string yy = term.factors;
            yy[static_cast<size_t>(i)] = 'Y';
            yy[static_cast<size_t>(j)] = 'Y';
            const double cyy = group.coefficient(yy);
            if (std::abs(cyy - term.coefficient) > 1e-12) {
                throw validation_error("hopping pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") has mismatched XX/YY coefficients");
            }
            circuit.gates.push_back(Gate::cnot(i, j));
            circuit.gates.push_back(Gate::crx(j, i, 4.0 * term.coefficient * dt));
            circuit.gates.push_back(Gate::cnot(i, j));
        }
    };

    emit_hopping(split.h3);
    emit_hopping(split.h2);

    for (const auto& term : split.h1.terms()) {
        const auto z = term.factors.find('Z');
        if (z == std::string::npos) continue;  // identity offset handled by the caller
        circuit.gates.push_back(Gate::rz(static_cast<int>(z), 2.0 * term.coefficient * dt));
    }
    return circuit;
}

Statevector evolve_trotter(const TrotterSplit& split, double t, int n_t,
                           const Statevector& state) {
    if (n_t < 1) throw validation_error("n_t must be >= 1");
    const Circuit step = trotter_step_circuit(split, t / n_t);
    Statevector out = state;
    for (int k = 0; k < n_t; ++k) apply(out, step);

    const double idc = split.h1.coefficient(std::string(static_cast<size_t>(out.qubit_count()), 'I'));
    if (idc != 0.0) {
        out.amplitudes() *= std::polar(1.0, -idc * t);
    }
    return out;
}

}  // namespace schwinger
