#include "schwinger/pauli.hpp"

#include "schwinger/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>

namespace schwinger {

namespace {

void check_term(const PauliTerm& t, int qubit_count) {
    if (!std::isfinite(t.coefficient)) {
        throw validation_error("PauliTerm coefficient is not finite");
    }
    if (static_cast<int>(t.factors.size()) != qubit_count) {
        throw validation_error("PauliTerm factor string length " +
                               std::to_string(t.factors.size()) + " != qubit count " +
                               std::to_string(qubit_count));
    }
    for (char c : t.factors) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw validation_error(std::string("invalid Pauli letter '") + c + "'");
        }
    }
}

}  // namespace

PauliOperator::PauliOperator(int qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 1) throw validation_error("qubit count must be positive");
}

PauliOperator::PauliOperator(int qubit_count, std::vector<PauliTerm> terms)
    : qubit_count_(qubit_count), terms_(std::move(terms)) {
    if (qubit_count < 1) throw validation_error("qubit count must be positive");
    for (const auto& t : terms_) check_term(t, qubit_count_);
    canonicalize();
}

void PauliOperator::canonicalize() {
    std::map<std::string, double> merged;
    for (const auto& t : terms_) merged[t.factors] += t.coefficient;
    terms_.clear();
    for (const auto& [factors, coeff] : merged) {
        if (coeff != 0.0) terms_.push_back({coeff, factors});
    }
}

PauliOperator PauliOperator::operator+(const PauliOperator& other) const {
    if (other.qubit_count_ != qubit_count_) {
        throw validation_error("adding operators with different qubit counts");
    }
    std::vector<PauliTerm> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return PauliOperator(qubit_count_, std::move(all));
}

PauliOperator PauliOperator::operator*(double scale) const {
    std::vector<PauliTerm> scaled = terms_;
    for (auto& t : scaled) t.coefficient *= scale;
    return PauliOperator(qubit_count_, std::move(scaled));
}

double PauliOperator::coefficient(const std::string& factors) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), factors,
                               [](const PauliTerm& t, const std::string& f) { return t.factors < f; });
    if (it != terms_.end() && it->factors == factors) return it->coefficient;
    return 0.0;
}

std::string PauliOperator::dump() const {
    std::string out;
    char buf[64];
    for (const auto& t : terms_) {
        std::snprintf(buf, sizeof buf, "%.12g", t.coefficient);
        out += buf;
        out += '\t';
        out += t.factors;
        out += '\n';
    }
    return out;
}

Eigen::MatrixXcd to_dense(const PauliOperator& op, int max_qubits) {
    const int n = op.qubit_count();
    if (n > max_qubits) {
        throw validation_error("dense form of " + std::to_string(n) +
                               " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    const Eigen::Index dim = Eigen::Index(1) << n;
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(dim, dim);
    const std::complex<double> i1(0.0, 1.0);

    // Each Pauli string is a signed permutation: column j maps to a single row
    // with a phase, so the dense sum is assembled column by column. Qubit q is
    // bit (n-1-q) of the basis index (qubit 0 = leftmost = most significant).
    for (const auto& term : op.terms()) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            Eigen::Index row = col;
            std::complex<double> amp(term.coefficient, 0.0);
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
            result(row, col) += amp;
        }
    }
    return result;
}

}  // namespace schwinger
