#include "schwinger/circuit.hpp"

#include "schwinger/errors.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

namespace schwinger {

namespace {

using cd = std::complex<double>;

inline Eigen::Index bit_mask(int qubit_count, int q) {
    return Eigen::Index(1) << (qubit_count - 1 - q);
}

// Apply the 2x2 unitary [[u00, u01], [u10, u11]] on `qubit`, restricted to
// basis states where `control_mask` bits are all set (0 = unconditional).
void apply_two_by_two(Eigen::VectorXcd& amps, int qubit_count, int qubit, cd u00, cd u01, cd u10,
                      cd u11, Eigen::Index control_mask) {
    const Eigen::Index dim = amps.size();
    const Eigen::Index mask = bit_mask(qubit_count, qubit);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & mask) != 0) continue;
        if ((i & control_mask) != control_mask) continue;
        const Eigen::Index j = i | mask;
        const cd a0 = amps[i];
        const cd a1 = amps[j];
        amps[i] = u00 * a0 + u01 * a1;
        amps[j] = u10 * a0 + u11 * a1;
    }
}

void check_gate(int qubit_count, const Gate& gate) {
    if (gate.q0 < 0 || gate.q0 >= qubit_count) {
        throw validation_error("gate qubit index out of range");
    }
    if (gate.two_qubit()) {
        if (gate.q1 < 0 || gate.q1 >= qubit_count) {
            throw validation_error("gate target index out of range");
        }
        if (gate.q1 == gate.q0) throw validation_error("control and target must differ");
    }
    if (!std::isfinite(gate.angle)) throw validation_error("gate angle must be finite");
}

}  // namespace

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::Rx: return "RX";
        case GateKind::Ry: return "RY";
        case GateKind::Rz: return "RZ";
        case GateKind::Cnot: return "CNOT";
        case GateKind::CRx: return "CRX";
        case GateKind::CRy: return "CRY";
    }
    return "?";
}

Circuit Circuit::inverse() const {
    Circuit inv;
    inv.qubit_count = qubit_count;
    inv.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) inv.gates.push_back(it->inverse());
    return inv;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.qubit_count != qubit_count) {
        throw validation_error("appending circuits with different qubit counts");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

int Circuit::cnot_count() const {
    int count = 0;
    for (const auto& g : gates) count += g.kind == GateKind::Cnot;
    return count;
}

std::string Circuit::dump() const {
    std::string out;
    char buf[96];
    for (const auto& g : gates) {
        const bool rot = g.kind != GateKind::X && g.kind != GateKind::Cnot;
        if (g.two_qubit() && rot) {
            std::snprintf(buf, sizeof buf, "%s %d,%d,%.12g\n", gate_name(g.kind), g.q0, g.q1,
                          g.angle);
        } else if (g.two_qubit()) {
            std::snprintf(buf, sizeof buf, "%s %d,%d\n", gate_name(g.kind), g.q0, g.q1);
        } else if (rot) {
            std::snprintf(buf, sizeof buf, "%s %d,%.12g\n", gate_name(g.kind), g.q0, g.angle);
        } else {
            std::snprintf(buf, sizeof buf, "%s %d\n", gate_name(g.kind), g.q0);
        }
        out += buf;
    }
    return out;
}

void apply_gate_unchecked(Eigen::VectorXcd& amps, int qubit_count, const Gate& gate) {
    const double c = std::cos(0.5 * gate.angle);
    const double s = std::sin(0.5 * gate.angle);
    const cd mi(0.0, -1.0);

    switch (gate.kind) {
        case GateKind::X:
            apply_two_by_two(amps, qubit_count, gate.q0, 0.0, 1.0, 1.0, 0.0, 0);
            break;
        case GateKind::Rx:
            apply_two_by_two(amps, qubit_count, gate.q0, c, mi * s, mi * s, c, 0);
            break;
        case GateKind::Ry:
            apply_two_by_two(amps, qubit_count, gate.q0, c, -s, s, c, 0);
            break;
        case GateKind::Rz:
            apply_two_by_two(amps, qubit_count, gate.q0, cd(c, -s), 0.0, 0.0, cd(c, s), 0);
            break;
        case GateKind::Cnot:
            apply_two_by_two(amps, qubit_count, gate.q1, 0.0, 1.0, 1.0, 0.0,
                             bit_mask(qubit_count, gate.q0));
            break;
        case GateKind::CRx:
            apply_two_by_two(amps, qubit_count, gate.q1, c, mi * s, mi * s, c,
                             bit_mask(qubit_count, gate.q0));
            break;
        case GateKind::CRy:
            apply_two_by_two(amps, qubit_count, gate.q1, c, -s, s, c,
                             bit_mask(qubit_count, gate.q0));
            break;
    }
}

void apply_pauli(Eigen::VectorXcd& amps, int qubit_count, int qubit, char pauli) {
    const cd i1(0.0, 1.0);
    switch (pauli) {
        case 'I':
            break;
        case 'X':
            apply_two_by_two(amps, qubit_count, qubit, 0.0, 1.0, 1.0, 0.0, 0);
            break;
        case 'Y':
            apply_two_by_two(amps, qubit_count, qubit, 0.0, -i1, i1, 0.0, 0);
            break;
        case 'Z':
            apply_two_by_two(amps, qubit_count, qubit, 1.0, 0.0, 0.0, -1.0, 0);
            break;
        default:
            throw validation_error("invalid Pauli letter");
    }
}

void apply(Statevector& state, const Gate& gate) {
    check_gate(state.qubit_count(), gate);
    apply_gate_unchecked(state.amplitudes(), state.qubit_count(), gate);
    state.check_norm();
}

void apply(Statevector& state, const Circuit& circuit) {
    if (circuit.qubit_count != state.qubit_count()) {
        throw validation_error("circuit and state qubit counts differ");
    }
    for (const auto& gate : circuit.gates) {
        check_gate(state.qubit_count(), gate);
        apply_gate_unchecked(state.amplitudes(), state.qubit_count(), gate);
    }
    state.check_norm();
}

}  // namespace schwinger
