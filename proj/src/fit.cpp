#include "schwinger/fit.hpp"

#include "schwinger/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace schwinger {

FitResult fit_decay(const std::vector<FitPoint>& series, const FitWindow& window,
                    double volume, const FitOptions& options) {
    if (!(volume > 0.0)) throw validation_error("fit volume must be > 0");

    std::vector<FitPoint> pts;
    for (const auto& p : series) {
        if (window.contains(p.t)) pts.push_back(p);
    }
    if (pts.size() < 3) {
        throw validation_error("fit window holds " + std::to_string(pts.size()) +
                               " points, need at least 3");
    }
    bool weighted = true;
    for (const auto& p : pts) {
        if (!(p.value > 0.0)) {
            throw validation_error("fit requires positive values inside the window");
        }
        if (p.std_error <= 0.0) weighted = false;
    }

    const auto weight = [&](const FitPoint& p) {
        return weighted ? 1.0 / (p.std_error * p.std_error) : 1.0;
    };

    // Log-linear seed: ln(y) = ln(c1) - gamma V t.
    double sw = 0, swt = 0, swtt = 0, swy = 0, swty = 0;
    for (const auto& p : pts) {
        const double w = weight(p);
        const double ly = std::log(p.value);
        sw += w;
        swt += w * p.t;
        swtt += w * p.t * p.t;
        swy += w * ly;
        swty += w * p.t * ly;
    }
    const double det = sw * swtt - swt * swt;
    if (std::abs(det) < 1e-14 * sw * swtt) {
        throw numerical_error("log-linear seed is singular (degenerate time grid)");
    }
    double gamma = -(sw * swty - swt * swy) / det / volume;
    double c1 = std::exp((swtt * swy - swt * swty) / det);

    const auto ssr_of = [&](double g, double c) {
        double s = 0;
        for (const auto& p : pts) {
            const double r = p.value - c * std::exp(-g * volume * p.t);
            s += weight(p) * r * r;
        }
        return s;
    };

    double ssr = ssr_of(gamma, c1);
    int iterations = 0;
    bool converged = false;
    Eigen::Matrix2d normal;
    for (; iterations < options.max_iterations; ++iterations) {
        normal.setZero();
        Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
        for (const auto& p : pts) {
            const double model = c1 * std::exp(-gamma * volume * p.t);
            const double r = p.value - model;
            const double w = weight(p);
            // d(model)/d(gamma), d(model)/d(c1)
            const Eigen::Vector2d j(-volume * p.t * model, model / c1);
            normal += w * j * j.transpose();
            rhs += w * j * r;
        }
        if (std::abs(normal.determinant()) <
            1e-14 * std::abs(normal(0, 0) * normal(1, 1))) {
            throw numerical_error("singular normal equations in decay fit");
        }
        const Eigen::Vector2d step = normal.ldlt().solve(rhs);

        double scale = 1.0;
        double next_ssr = ssr;
        double next_gamma = gamma, next_c1 = c1;
        for (int halving = 0; halving < 30; ++halving) {
            const double g = gamma + scale * step[0];
            const double c = c1 + scale * step[1];
            if (c > 0.0) {
                const double s = ssr_of(g, c);
                if (s <= ssr) {
                    next_ssr = s;
                    next_gamma = g;
                    next_c1 = c;
                    break;
                }
            }
            scale *= 0.5;
        }
        const double improvement = ssr - next_ssr;
        gamma = next_gamma;
        c1 = next_c1;
        ssr = next_ssr;
        if (improvement <= options.tolerance * std::max(ssr, 1e-300)) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw numerical_error("decay fit did not converge in " +
                              std::to_string(options.max_iterations) + " iterations");
    }

    // Parameter covariance: inverse normal matrix, scaled by the residual
    // variance estimate when the errors are not known a priori.
    Eigen::Matrix2d covariance = normal.inverse();
    if (!weighted) {
        const double dof = static_cast<double>(pts.size()) - 2.0;
        covariance *= ssr / dof;
    }

    FitResult result;
    result.gamma = gamma;
    result.c1 = c1;
    result.var_gamma = covariance(0, 0);
    result.var_c1 = covariance(1, 1);
    result.cov = covariance(0, 1);
    result.points_used = static_cast<int>(pts.size());
    result.iterations = iterations;
    result.weighted = weighted;
    result.volume = volume;
    return result;
}

}  // namespace schwinger
