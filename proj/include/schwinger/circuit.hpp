#pragma once

#include "schwinger/statevector.hpp"

#include <string>
#include <vector>

namespace schwinger {

enum class GateKind { X, Rx, Ry, Rz, Cnot, CRx, CRy };

// One gate. q0 is the sole qubit of single-qubit gates and the control of
// two-qubit gates; q1 is the target of two-qubit gates (-1 otherwise).
// Rotations follow R_P(theta) = exp(-i theta sigma_P / 2).
struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;
    double angle = 0.0;

    static Gate x(int q) { return {GateKind::X, q, -1, 0.0}; }
    static Gate rx(int q, double angle) { return {GateKind::Rx, q, -1, angle}; }
    static Gate ry(int q, double angle) { return {GateKind::Ry, q, -1, angle}; }
    static Gate rz(int q, double angle) { return {GateKind::Rz, q, -1, angle}; }
    static Gate cnot(int control, int target) { return {GateKind::Cnot, control, target, 0.0}; }
    static Gate crx(int control, int target, double angle) {
        return {GateKind::CRx, control, target, angle};
    }
    static Gate cry(int control, int target, double angle) {
        return {GateKind::CRy, control, target, angle};
    }

    bool two_qubit() const {
        return kind == GateKind::Cnot || kind == GateKind::CRx || kind == GateKind::CRy;
    }
    Gate inverse() const { return {kind, q0, q1, -angle}; }
};

const char* gate_name(GateKind kind);

struct Circuit {
    int qubit_count = 0;
    std::vector<Gate> gates;

    // Reversed order with negated angles (X and CNOT are self-inverse).
    Circuit inverse() const;
    Circuit& append(const Circuit& other);
    int cnot_count() const;

    // One gate per line: `KIND q0[,q1][,angle]`.
    std::string dump() const;
};

// In-place application. The public entry points re-check the norm afterwards
// (1e-8 tolerance) to catch gate bugs; they never re-normalize.
void apply(Statevector& state, const Gate& gate);
void apply(Statevector& state, const Circuit& circuit);

// Raw kernel without the norm check, for the per-shot trajectory sampler.
void apply_gate_unchecked(Eigen::VectorXcd& amps, int qubit_count, const Gate& gate);

// Apply a single-qubit Pauli (I/X/Y/Z letter) in place; used for noise
// injection.
void apply_pauli(Eigen::VectorXcd& amps, int qubit_count, int qubit, char pauli);

}  // namespace schwinger
