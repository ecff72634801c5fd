#include "schwinger/statevector.hpp"

#include "schwinger/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace schwinger {

std::size_t bits_to_index(std::string_view bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw validation_error("bitstring must contain only 0 and 1");
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return index;
}

std::string index_to_bits(std::size_t index, int qubit_count) {
    if (qubit_count < 1 || index >= (std::size_t(1) << qubit_count)) {
        throw validation_error("basis index " + std::to_string(index) + " out of range for " +
                               std::to_string(qubit_count) + " qubits");
    }
    std::string bits(static_cast<size_t>(qubit_count), '0');
    for (int q = 0; q < qubit_count; ++q) {
        if (index & (std::size_t(1) << (qubit_count - 1 - q))) bits[static_cast<size_t>(q)] = '1';
    }
    return bits;
}

Statevector::Statevector(int qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 1 || qubit_count > 24) {
        throw validation_error("qubit count out of supported range [1, 24]");
    }
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index(1) << qubit_count);
    amps_[0] = 1.0;
}

Statevector Statevector::basis(std::string_view bits) {
    Statevector s(static_cast<int>(bits.size()));
    s.amps_[0] = 0.0;
    s.amps_[static_cast<Eigen::Index>(bits_to_index(bits))] = 1.0;
    return s;
}

std::complex<double> Statevector::amplitude(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != qubit_count_) {
        throw validation_error("bitstring length does not match qubit count");
    }
    return amps_[static_cast<Eigen::Index>(bits_to_index(bits))];
}

double Statevector::norm() const { return amps_.norm(); }

void Statevector::check_norm(double tol) const {
    if (std::abs(norm() - 1.0) > tol) {
        throw numerical_error("statevector norm drifted to " + std::to_string(norm()));
    }
}

double fidelity(const Statevector& psi, const Statevector& phi) {
    if (psi.qubit_count() != phi.qubit_count()) {
        throw validation_error("fidelity of states with different qubit counts");
    }
    return std::norm(psi.amplitudes().dot(phi.amplitudes()));
}

std::vector<double> probability_vector(const Statevector& state) {
    std::vector<double> probs(static_cast<size_t>(state.dim()));
    for (Eigen::Index i = 0; i < state.dim(); ++i) probs[static_cast<size_t>(i)] = std::norm(state.amplitudes()[i]);
    return probs;
}

std::map<std::string, double> probabilities(const Statevector& state) {
    std::map<std::string, double> out;
    for (Eigen::Index i = 0; i < state.dim(); ++i) {
        const double p = std::norm(state.amplitudes()[i]);
        if (p > 1e-15) out[index_to_bits(static_cast<std::size_t>(i), state.qubit_count())] = p;
    }
    return out;
}

Eigen::VectorXcd apply_operator(const PauliOperator& op, const Statevector& state) {
    if (op.qubit_count() != state.qubit_count()) {
        throw validation_error("operator and state qubit counts differ");
    }
    const int n = op.qubit_count();
    const Eigen::Index dim = state.dim();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    const std::complex<double> i1(0.0, 1.0);

    for (const auto& term : op.terms()) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            const std::complex<double>& a = state.amplitudes()[col];
            if (a == 0.0) continue;
            Eigen::Index row = col;
            std::complex<double> amp = a * term.coefficient;
            for (int q = 0; q < n; ++q) {
                const Eigen::Index mask = Eigen::Index(1) << (n - 1 - q);
                const bool bit = (col & mask) != 0;
                switch (term.factors[static_cast<size_t>(q)]) {
                    case 'I':
                        break;
                    case 'X':
                        row ^= mask;
                        break;
                    case 'Y':
                        row ^= mask;
                        amp *= bit ? -i1 : i1;
                        break;
                    case 'Z':
                        if (bit) amp = -amp;
                        break;
                }
            }
            out[row] += amp;
        }
    }
    return out;
}

double expectation(const PauliOperator& op, const Statevector& state) {
    const std::complex<double> value = state.amplitudes().dot(apply_operator(op, state));
    if (std::abs(value.imag()) > 1e-10) {
        throw numerical_error("expectation value has imaginary part " +
                              std::to_string(value.imag()));
    }
    return value.real();
}

}  // namespace schwinger
