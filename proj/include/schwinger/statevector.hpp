#pragma once

#include "schwinger/pauli.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace schwinger {

// Bit ordering used everywhere: qubit 0 is the leftmost character of a
// bitstring and the most significant bit of the basis index, so |10101> sits
// at index 0b10101 = 21.
std::size_t bits_to_index(std::string_view bits);
std::string index_to_bits(std::size_t index, int qubit_count);

// Normalized complex amplitude vector over the n-qubit computational basis.
class Statevector {
public:
    explicit Statevector(int qubit_count);  // |00...0>
    static Statevector basis(std::string_view bits);

    int qubit_count() const { return qubit_count_; }
    Eigen::Index dim() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    Eigen::VectorXcd& amplitudes() { return amps_; }

    std::complex<double> amplitude(std::string_view bits) const;
    double norm() const;

    // Throws numerical_error if the norm drifted beyond tolerance; gates are
    // unitary so drift indicates a bug, and states are never re-normalized.
    void check_norm(double tol = 1e-8) const;

private:
    int qubit_count_;
    Eigen::VectorXcd amps_;
};

// |<psi|phi>|^2.
double fidelity(const Statevector& psi, const Statevector& phi);

// Basis probabilities indexed by basis integer; sums to 1 within 1e-10.
std::vector<double> probability_vector(const Statevector& state);

// Basis probabilities keyed by bitstring (zeros below 1e-15 omitted).
std::map<std::string, double> probabilities(const Statevector& state);

// <psi|op|psi>, evaluated term-by-term without forming the dense matrix.
// The imaginary part must vanish within 1e-10 (real-coefficient operators).
double expectation(const PauliOperator& op, const Statevector& state);

// op|psi> as a (generally unnormalized) vector; helper for expectation and
// residual checks.
Eigen::VectorXcd apply_operator(const PauliOperator& op, const Statevector& state);

}  // namespace schwinger
