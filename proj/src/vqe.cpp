#include "schwinger/vqe.hpp"

#include "schwinger/errors.hpp"
#include "schwinger/evolve.hpp"
#include "schwinger/lattice.hpp"
#include "schwinger/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace schwinger {

namespace {

constexpr int kQubits = 5;
constexpr int kParams = 9;

void entangling_block(Circuit& circuit, int i, int j, double theta) {
    circuit.gates.push_back(Gate::cnot(i, j));
    circuit.gates.push_back(Gate::cry(j, i, theta));
    circuit.gates.push_back(Gate::cnot(i, j));
}

double clamp_angle(double x) {
    return std::clamp(x, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
}

AnsatzParams clamped(const AnsatzParams& params) {
    AnsatzParams out = params;
    for (double& x : out.theta) {
        if (!std::isfinite(x)) throw validation_error("ansatz angle must be finite");
        x = clamp_angle(x);
    }
    return out;
}

}  // namespace

Circuit ansatz_circuit(const AnsatzParams& params) {
    const AnsatzParams p = clamped(params);
    Circuit circuit;
    circuit.qubit_count = kQubits;
    entangling_block(circuit, 0, 1, p.theta[0]);
    entangling_block(circuit, 2, 3, p.theta[1]);
    for (int q = 0; q < kQubits; ++q) {
        circuit.gates.push_back(Gate::rz(q, p.theta[static_cast<size_t>(4 + q)]));
    }
    entangling_block(circuit, 1, 2, p.theta[2]);
    entangling_block(circuit, 3, 4, p.theta[3]);
    return circuit;
}

Statevector ansatz_state(const AnsatzParams& params) {
    Statevector state = Statevector::basis(vacuum_bits(kQubits));
    apply(state, ansatz_circuit(params));
    return state;
}

double vqe_energy(const AnsatzParams& params, const PauliOperator& h0) {
    return expectation(h0, ansatz_state(params));
}

Statevector exact_ground_state(const PauliOperator& h, int sector) {
    const int nq = h.qubit_count();
    const Eigen::Index dim = Eigen::Index(1) << nq;
    const int weight = vacuum_weight(nq) + sector;
    if (weight < 0 || weight > nq) throw validation_error("charge sector out of range");

    std::vector<Eigen::Index> basis;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (std::popcount(static_cast<std::uint64_t>(i)) == weight) basis.push_back(i);
    }

    const Eigen::MatrixXcd dense = to_dense(h);
    Eigen::MatrixXcd restricted(basis.size(), basis.size());
    for (size_t r = 0; r < basis.size(); ++r) {
        for (size_t c = 0; c < basis.size(); ++c) {
            restricted(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                dense(basis[r], basis[c]);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(restricted);
    if (solver.info() != Eigen::Success) throw numerical_error("sector diagonalization failed");
    if (basis.size() > 1 && solver.eigenvalues()[1] - solver.eigenvalues()[0] < 1e-10) {
        throw numerical_error("restricted ground level is degenerate within 1e-10");
    }

    Eigen::VectorXcd ground = solver.eigenvectors().col(0);
    Eigen::Index largest = 0;
    ground.cwiseAbs().maxCoeff(&largest);
    ground *= std::polar(1.0, -std::arg(ground[largest]));

    Statevector state(nq);
    state.amplitudes().setZero();
    for (size_t r = 0; r < basis.size(); ++r) state.amplitudes()[basis[r]] = ground[static_cast<Eigen::Index>(r)];
    state.check_norm(1e-10);
    return state;
}

namespace {

struct SimplexPoint {
    std::array<double, kParams> x;
    double f;
};

// Standard Nelder-Mead on the clamped parameter box. Returns the best point;
// adds the number of function evaluations to `evaluations`.
SimplexPoint nelder_mead(const std::function<double(const std::array<double, kParams>&)>& f,
                         const std::array<double, kParams>& start, const VqeOptions& options,
                         int& evaluations) {
    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
    constexpr double kInitStep = 0.25;

    std::vector<SimplexPoint> simplex;
    simplex.reserve(kParams + 1);
    auto eval = [&](const std::array<double, kParams>& x) {
        ++evaluations;
        return f(x);
    };
    simplex.push_back({start, eval(start)});
    for (int i = 0; i < kParams; ++i) {
        auto x = start;
        x[static_cast<size_t>(i)] = clamp_angle(x[static_cast<size_t>(i)] + kInitStep);
        simplex.push_back({x, eval(x)});
    }

    while (evaluations < options.max_evaluations) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const SimplexPoint& a, const SimplexPoint& b) { return a.f < b.f; });

        double f_spread = simplex.back().f - simplex.front().f;
        double x_spread = 0.0;
        for (int i = 0; i < kParams; ++i) {
            double lo = simplex[0].x[static_cast<size_t>(i)], hi = lo;
            for (const auto& p : simplex) {
                lo = std::min(lo, p.x[static_cast<size_t>(i)]);
                hi = std::max(hi, p.x[static_cast<size_t>(i)]);
            }
            x_spread = std::max(x_spread, hi - lo);
        }
        if (f_spread < options.f_tolerance && x_spread < options.x_tolerance) break;

        std::array<double, kParams> centroid{};
        for (size_t p = 0; p + 1 < simplex.size(); ++p) {
            for (int i = 0; i < kParams; ++i) centroid[static_cast<size_t>(i)] += simplex[p].x[static_cast<size_t>(i)];
        }
        for (double& c : centroid) c /= kParams;

        auto blend = [&](double coeff) {
            std::array<double, kParams> x;
            const auto& worst = simplex.back().x;
            for (int i = 0; i < kParams; ++i) {
                x[static_cast<size_t>(i)] = clamp_angle(centroid[static_cast<size_t>(i)] +
                                                        coeff * (centroid[static_cast<size_t>(i)] -
                                                                 worst[static_cast<size_t>(i)]));
            }
            return x;
        };

        const auto reflected = blend(kReflect);
        const double f_reflected = eval(reflected);
        if (f_reflected < simplex.front().f) {
            const auto expanded = blend(kExpand);
            const double f_expanded = eval(expanded);
            simplex.back() = f_expanded < f_reflected ? SimplexPoint{expanded, f_expanded}
                                                      : SimplexPoint{reflected, f_reflected};
            continue;
        }
        if (f_reflected < simplex[simplex.size() - 2].f) {
            simplex.back() = {reflected, f_reflected};
            continue;
        }
        const bool outside = f_reflected < simplex.back().f;
        const auto contracted = blend(outside ? kContract : -kContract);
        const double f_contracted = eval(contracted);
        if (f_contracted < std::min(f_reflected, simplex.back().f)) {
            simplex.back() = {contracted, f_contracted};
            continue;
        }
        for (size_t p = 1; p < simplex.size(); ++p) {
            for (int i = 0; i < kParams; ++i) {
                simplex[p].x[static_cast<size_t>(i)] =
                    simplex[0].x[static_cast<size_t>(i)] +
                    kShrink * (simplex[p].x[static_cast<size_t>(i)] -
                               simplex[0].x[static_cast<size_t>(i)]);
            }
            simplex[p].f = eval(simplex[p].x);
        }
    }

    std::sort(simplex.begin(), simplex.end(),
              [](const SimplexPoint& a, const SimplexPoint& b) { return a.f < b.f; });
    return simplex.front();
}

}  // namespace

VqeResult optimize_vqe(const PauliOperator& h0, const AnsatzParams& init,
                       const VqeOptions& options) {
    if (h0.qubit_count() != kQubits) {
        throw validation_error("the 9-parameter ansatz is defined for 5 qubits");
    }
    if (options.restarts < 1) throw validation_error("restarts must be >= 1");

    const Statevector target = exact_ground_state(h0, 0);
    const AnsatzParams start = clamped(init);

    auto objective = [&](const std::array<double, kParams>& x) {
        AnsatzParams p;
        p.theta = x;
        return vqe_energy(p, h0);
    };

    struct RestartOutcome {
        SimplexPoint best;
        int evaluations = 0;
    };
    std::vector<RestartOutcome> outcomes(static_cast<size_t>(options.restarts));

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < options.restarts; ++r) {
        std::array<double, kParams> x0 = start.theta;
        if (r > 0) {
            SplitMix64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
            for (double& x : x0) {
                x = clamp_angle(x + rng.uniform(-options.jitter, options.jitter));
            }
        }
        int evals = 0;
        // A second descent from the first result restarts the simplex, which
        // reliably escapes collapsed simplices on this landscape.
        SimplexPoint best = nelder_mead(objective, x0, options, evals);
        best = nelder_mead(objective, best.x, options, evals);
        outcomes[static_cast<size_t>(r)] = {best, evals};
    }

    size_t winner = 0;
    int total_evals = 0;
    for (size_t r = 0; r < outcomes.size(); ++r) {
        total_evals += outcomes[r].evaluations;
        if (outcomes[r].best.f < outcomes[winner].best.f) winner = r;
    }

    VqeResult result;
    result.params.theta = outcomes[winner].best.x;
    result.energy = outcomes[winner].best.f;
    result.fidelity = fidelity(ansatz_state(result.params), target);
    result.evaluations = total_evals;
    result.converged = result.fidelity >= 0.99;
    return result;
}

}  // namespace schwinger
