#include "schwinger/lattice.hpp"

#include "schwinger/errors.hpp"

#include <cmath>
#include <vector>

namespace schwinger {

void LatticeParams::validate() const {
    if (!(a > 0.0)) throw validation_error("lattice spacing a must be > 0");
    if (n_sites < 2) throw validation_error("n_sites must be >= 2");
    if (n_full != 2 * n_sites) throw validation_error("n_full must equal 2 * n_sites");
    if (m < 0.0) throw validation_error("mass m must be >= 0");
    if (eE < 0.0) throw validation_error("field eE must be >= 0");
}

namespace {

std::string pair_string(int n_qubits, int i, char p) {
    std::string s(static_cast<size_t>(n_qubits), 'I');
    s[static_cast<size_t>(i)] = p;
    s[static_cast<size_t>(i) + 1] = p;
    return s;
}

}  // namespace

PauliOperator build_parity_hamiltonian(ParitySector sector, const LatticeParams& params) {
    params.validate();
    const int nq = params.n_sites;
    std::vector<PauliTerm> terms;

    // Site energies. Even sector covers staggered sites 0..nq-1, odd sector
    // sites 1..nq (qubit k holding site k+1). c_site = (-1)^site m + eE a site.
    double identity_offset = 0.0;
    for (int k = 0; k < nq; ++k) {
        const int site = sector == ParitySector::Even ? k : k + 1;
        const double c = (site % 2 == 0 ? params.m : -params.m) + params.eE * params.a * site;
        std::string z(static_cast<size_t>(nq), 'I');
        z[static_cast<size_t>(k)] = 'Z';
        terms.push_back({0.5 * c, z});
        identity_offset += 0.5 * c;
    }
    terms.push_back({identity_offset, std::string(static_cast<size_t>(nq), 'I')});

    // Hopping. sigma+ sigma- + h.c. = (XX + YY)/2 on the pair, so each string
    // carries half the bond strength. The bond touching the parity-fixed site
    // (pair (0,1) in the even sector, the last pair in the odd sector) is
    // enhanced by sqrt(2).
    const int boundary = sector == ParitySector::Even ? 0 : nq - 2;
    for (int i = 0; i + 1 < nq; ++i) {
        const double bond =
            i == boundary ? 1.0 / (std::sqrt(2.0) * params.a) : 1.0 / (2.0 * params.a);
        terms.push_back({0.5 * bond, pair_string(nq, i, 'X')});
        terms.push_back({0.5 * bond, pair_string(nq, i, 'Y')});
    }

    return PauliOperator(nq, std::move(terms));
}

TrotterSplit split_trotter_terms(const PauliOperator& h_even, const LatticeParams& params) {
    params.validate();
    const int nq = h_even.qubit_count();
    std::vector<PauliTerm> g1, g2, g3;

    for (const auto& term : h_even.terms()) {
        int first = -1;
        int weight = 0;
        char letter = 'I';
        bool uniform = true;
        for (int q = 0; q < nq; ++q) {
            const char c = term.factors[static_cast<size_t>(q)];
            if (c == 'I') continue;
            if (first < 0) {
                first = q;
                letter = c;
            } else if (c != letter) {
                uniform = false;
            }
            ++weight;
        }
        if (first < 0 || (weight == 1 && letter == 'Z')) {
            g1.push_back(term);
        } else if (uniform && weight == 2 && (letter == 'X' || letter == 'Y') &&
                   term.factors[static_cast<size_t>(first) + 1] == letter) {
            (first % 2 == 0 ? g2 : g3).push_back(term);
        } else {
            throw validation_error("operator term '" + term.factors +
                                   "' is not a site energy or an adjacent hopping string");
        }
    }

    return TrotterSplit{PauliOperator(nq, std::move(g1)), PauliOperator(nq, std::move(g2)),
                        PauliOperator(nq, std::move(g3))};
}

int charge_weight(std::string_view bits, int n_sites) {
    if (static_cast<int>(bits.size()) != n_sites) {
        throw validation_error("bitstring length " + std::to_string(bits.size()) +
                               " != n_sites " + std::to_string(n_sites));
    }
    int weight = 0;
    for (char c : bits) {
        if (c == '1') {
            ++weight;
        } else if (c != '0') {
            throw validation_error("bitstring must contain only 0 and 1");
        }
    }
    return weight - vacuum_weight(n_sites);
}

std::string vacuum_bits(int n_sites) {
    std::string s(static_cast<size_t>(n_sites), '0');
    for (int i = 0; i < n_sites; i += 2) s[static_cast<size_t>(i)] = '1';
    return s;
}

int vacuum_weight(int n_sites) { return (n_sites + 1) / 2; }

}  // namespace schwinger
