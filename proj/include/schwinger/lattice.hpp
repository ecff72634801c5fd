#pragma once

#include "schwinger/pauli.hpp"

#include <string>
#include <string_view>

namespace schwinger {

// Parameters of the reduced staggered lattice. One parity sector holds
// n_sites qubits; the full staggered lattice has n_full = 2 * n_sites sites.
struct LatticeParams {
    double m = 1.0;      // bare fermion mass
    double eE = 20.0;    // field strength times charge
    double a = 0.45;     // lattice spacing
    int n_sites = 5;     // qubits per parity sector
    int n_full = 10;

    void validate() const;

    LatticeParams with_mass(double mass) const {
        LatticeParams p = *this;
        p.m = mass;
        return p;
    }
    LatticeParams with_field(double field) const {
        LatticeParams p = *this;
        p.eE = field;
        return p;
    }
};

enum class ParitySector { Even, Odd };

// Spin-form lattice Hamiltonian of one parity sector after the Jordan-Wigner
// transformation. Site energies enter as c_n * (sigma_3 + 1)/2, i.e. each
// contributes a Z term with coefficient c_n / 2 plus an identity offset; the
// offset is kept because energies feed the VQE comparison (it cancels in all
// probabilities). Hopping pairs carry (XX + YY)/2 structure; the pair touching
// the parity-fixed site is enhanced by sqrt(2).
PauliOperator build_parity_hamiltonian(ParitySector sector, const LatticeParams& params);

// The three internally-commuting groups driving one Trotter step:
//   h1 = all Z and identity terms,
//   h2 = hopping on even-first pairs (0,1), (2,3), ...
//   h3 = hopping on odd-first pairs (1,2), (3,4), ...
// h1 + h2 + h3 reconstructs the input operator term-by-term.
struct TrotterSplit {
    PauliOperator h1, h2, h3;
};

TrotterSplit split_trotter_terms(const PauliOperator& h_even, const LatticeParams& params);

// Net charge of a measured bitstring relative to the reference vacuum pattern
// |1010...>: Hamming weight minus the reference weight. Zero identifies the
// physical subspace (for 5 sites: weight 3).
int charge_weight(std::string_view bits, int n_sites);

// The reference vacuum pattern "1010..." on n_sites qubits and its weight.
std::string vacuum_bits(int n_sites);
int vacuum_weight(int n_sites);

}  // namespace schwinger
