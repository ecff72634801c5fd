#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwinger/circuit.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/rng.hpp"

#include "dense_reference.hpp"

#include <cmath>
#include <complex>

using namespace schwinger;
using namespace std::complex_literals;

namespace {

Statevector random_state(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Statevector s(n);
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        s.amplitudes()(i) = std::complex<double>(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    s.amplitudes().normalize();
    return s;
}

Gate random_gate(int n, SplitMix64& rng) {
    const auto kind = static_cast<GateKind>(rng.uniform_int(7));
    const int q0 = static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(n)));
    int q1 = q0;
    while (q1 == q0) q1 = static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(n)));
    const double angle = rng.uniform(-6.0, 6.0);
    switch (kind) {
        case GateKind::X: return Gate::x(q0);
        case GateKind::Rx: return Gate::rx(q0, angle);
        case GateKind::Ry: return Gate::ry(q0, angle);
        case GateKind::Rz: return Gate::rz(q0, angle);
        case GateKind::Cnot: return Gate::cnot(q0, q1);
        case GateKind::CRx: return Gate::crx(q0, q1, angle);
        case GateKind::CRy: return Gate::cry(q0, q1, angle);
    }
    return Gate::x(q0);
}

}  // namespace

TEST_CASE("every gate kind matches the dense reference") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_int(3));
        const Gate gate = random_gate(n, rng);
        Statevector state = random_state(n, 7000 + static_cast<std::uint64_t>(trial));
        const Eigen::VectorXcd expected =
            dense_ref::gate_matrix(n, gate) * state.amplitudes();
        apply(state, gate);
        CHECK((state.amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("rotation conventions") {
    // Rz = diag(e^{-i theta/2}, e^{+i theta/2}).
    Statevector s = Statevector::basis("0");
    apply(s, Gate::rz(0, 0.8));
    CHECK(std::abs(s.amplitude("0") - std::exp(-0.4i)) < 1e-15);
    s = Statevector::basis("1");
    apply(s, Gate::rz(0, 0.8));
    CHECK(std::abs(s.amplitude("1") - std::exp(0.4i)) < 1e-15);

    // Ry(pi)|0> = |1>, Ry(pi)|1> = -|0>.
    s = Statevector::basis("0");
    apply(s, Gate::ry(0, M_PI));
    CHECK(std::abs(s.amplitude("1") - 1.0) < 1e-15);
    s = Statevector::basis("1");
    apply(s, Gate::ry(0, M_PI));
    CHECK(std::abs(s.amplitude("0") + 1.0) < 1e-15);

    // Rx(pi)|0> = -i|1>.
    s = Statevector::basis("0");
    apply(s, Gate::rx(0, M_PI));
    CHECK(std::abs(s.amplitude("1") + 1.0i) < 1e-15);
}

TEST_CASE("CNOT orientation: q0 controls, q1 flips") {
    Statevector s = Statevector::basis("10");
    apply(s, Gate::cnot(0, 1));
    CHECK(std::abs(s.amplitude("11") - 1.0) < 1e-15);

    s = Statevector::basis("10");
    apply(s, Gate::cnot(1, 0));
    CHECK(std::abs(s.amplitude("10") - 1.0) < 1e-15);

    s = Statevector::basis("01");
    apply(s, Gate::cnot(1, 0));
    CHECK(std::abs(s.amplitude("11") - 1.0) < 1e-15);
}

TEST_CASE("controlled rotations act only on the control-1 block") {
    Statevector s = Statevector::basis("01");  // control (qubit 1) is 1
    apply(s, Gate::cry(1, 0, M_PI));
    CHECK(std::abs(s.amplitude("11") - 1.0) < 1e-15);

    s = Statevector::basis("00");  // control clear: no action
    apply(s, Gate::cry(1, 0, M_PI));
    CHECK(std::abs(s.amplitude("00") - 1.0) < 1e-15);
}

TEST_CASE("circuit inverse undoes the circuit exactly") {
    SplitMix64 rng(99);
    Circuit c;
    c.qubit_count = 4;
    for (int k = 0; k < 25; ++k) c.gates.push_back(random_gate(4, rng));

    const Statevector initial = random_state(4, 321);
    Statevector s = initial;
    apply(s, c);
    apply(s, c.inverse());
    CHECK((s.amplitudes() - initial.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);

    const Circuit inv = c.inverse();
    CHECK(inv.gates.size() == c.gates.size());
    CHECK(inv.gates.front().q0 == c.gates.back().q0);
    CHECK(inv.gates.front().angle == -c.gates.back().angle);
}

TEST_CASE("append and cnot_count") {
    Circuit a;
    a.qubit_count = 3;
    a.gates = {Gate::cnot(0, 1), Gate::rz(2, 0.1)};
    Circuit b;
    b.qubit_count = 3;
    b.gates = {Gate::cnot(1, 2)};
    a.append(b);
    CHECK(a.gates.size() == 3);
    CHECK(a.cnot_count() == 2);

    Circuit wrong;
    wrong.qubit_count = 2;
    CHECK_THROWS_AS(a.append(wrong), validation_error);
}

TEST_CASE("dump format") {
    Circuit c;
    c.qubit_count = 3;
    c.gates = {Gate::cnot(0, 1), Gate::crx(1, 0, 0.25), Gate::rz(2, -1.5), Gate::x(0)};
    CHECK(c.dump() == "CNOT 0,1\nCRX 1,0,0.25\nRZ 2,-1.5\nX 0\n");
}

TEST_CASE("gate validation") {
    Statevector s(2);
    CHECK_THROWS_AS(apply(s, Gate::x(2)), validation_error);
    CHECK_THROWS_AS(apply(s, Gate::cnot(0, 0)), validation_error);
    CHECK_THROWS_AS(apply(s, Gate::cnot(0, 5)), validation_error);
    CHECK_THROWS_AS(apply(s, Gate::rz(0, std::nan(""))), validation_error);

    Circuit c;
    c.qubit_count = 3;
    CHECK_THROWS_AS(apply(s, c), validation_error);
}

TEST_CASE("apply_pauli matches the dense string matrices") {
    for (char p : {'X', 'Y', 'Z'}) {
        for (int q = 0; q < 3; ++q) {
            Statevector s = random_state(3, 55 + static_cast<std::uint64_t>(q) + p);
            std::string factors(3, 'I');
            factors[static_cast<size_t>(q)] = p;
            const Eigen::VectorXcd expected =
                dense_ref::string_matrix(factors) * s.amplitudes();
            apply_pauli(s.amplitudes(), 3, q, p);
            CHECK((s.amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-15);
        }
    }
    Statevector s(2);
    CHECK_THROWS_AS(apply_pauli(s.amplitudes(), 2, 0, 'Q'), validation_error);
}
