#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace schwinger {

// One weighted Pauli string, e.g. 0.35355 * XXIII. `factors` holds one letter
// from {I, X, Y, Z} per qubit; qubit 0 is the leftmost character (the same
// convention bitstrings use throughout the artifact).
struct PauliTerm {
    double coefficient = 0.0;
    std::string factors;
};

// A real-weighted sum of Pauli strings on a fixed qubit count. Canonical form:
// terms sorted lexicographically by factor string, duplicates merged, exact
// zeros dropped. Real coefficients on Hermitian strings make the operator
// Hermitian by construction. Immutable after construction; safe to share
// across threads.
class PauliOperator {
public:
    explicit PauliOperator(int qubit_count);
    PauliOperator(int qubit_count, std::vector<PauliTerm> terms);

    int qubit_count() const { return qubit_count_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    PauliOperator operator+(const PauliOperator& other) const;
    PauliOperator operator*(double scale) const;

    // Coefficient of a given factor string (0 if absent).
    double coefficient(const std::string& factors) const;

    // Plain-text dump, one `coefficient<TAB>string` line per term, in the
    // canonical (lexicographic) order. Stable across runs; used for golden
    // files.
    std::string dump() const;

private:
    int qubit_count_;
    std::vector<PauliTerm> terms_;

    void canonicalize();
};

// Dense 2^n x 2^n matrix form, the oracle for all circuit-level checks.
// Throws validation_error above `max_qubits` (default 12) to keep memory
// bounded.
Eigen::MatrixXcd to_dense(const PauliOperator& op, int max_qubits = 12);

// <state|op|state> without forming the dense matrix; declared in
// statevector.hpp (needs the Statevector type).

}  // namespace schwinger
