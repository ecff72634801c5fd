#include "schwinger/analytic.hpp"

#include "schwinger/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace schwinger {

double effective_mass(double m, double p_perp) {
    if (m < 0.0 || p_perp < 0.0) {
        throw validation_error("effective_mass needs m >= 0 and p_perp >= 0");
    }
    return std::hypot(m, p_perp);
}

double analytic_rate_1p1(double m, double eE) {
    if (m < 0.0 || eE < 0.0) {
        throw validation_error("analytic_rate_1p1 needs m >= 0 and eE >= 0");
    }
    if (eE == 0.0) return 0.0;
    if (m == 0.0) {
        throw validation_error("analytic_rate_1p1 diverges at m = 0 with eE > 0");
    }
    // -log1p(-exp(-x)) = |ln(1 - e^{-x})|, accurate for both small and large x.
    const double x = std::numbers::pi * m * m / eE;
    return -(eE / (2.0 * std::numbers::pi)) * std::log1p(-std::exp(-x));
}

namespace {

// Trapezoid of f over the nodes, where grid[i] holds (m', f(m')).
double trapezoid(const std::vector<std::pair<double, double>>& grid) {
    double sum = 0.0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        sum += 0.5 * (grid[i + 1].first - grid[i].first) * (grid[i].second + grid[i + 1].second);
    }
    return sum;
}

double convention_scale(RateConvention convention) {
    const double inv_pi = 1.0 / std::numbers::pi;
    return convention == RateConvention::Literal ? inv_pi : inv_pi * inv_pi;
}

}  // namespace

double analytic_rate_3p1(double m, double eE, double p_perp_max, double grid_step,
                         RateConvention convention) {
    if (p_perp_max < 0.0) throw validation_error("p_perp_max must be >= 0");
    if (grid_step <= 0.0) throw validation_error("grid_step must be > 0");
    if (p_perp_max == 0.0) return 0.0;

    const double m_max = effective_mass(m, p_perp_max);
    std::vector<std::pair<double, double>> grid;
    for (int i = 0;; ++i) {
        double mp = m + grid_step * i;
        const bool last = mp >= m_max - 1e-12;
        if (last) mp = m_max;
        grid.emplace_back(mp, mp * analytic_rate_1p1(mp, eE));
        if (last) break;
    }
    return convention_scale(convention) * trapezoid(grid);
}

double integrate_rates(const std::map<double, double>& gamma_by_mass,
                       RateConvention convention) {
    if (gamma_by_mass.size() < 2) {
        throw validation_error("integrate_rates needs at least 2 grid points");
    }
    std::vector<std::pair<double, double>> grid;
    for (const auto& [mp, gamma] : gamma_by_mass) {
        if (mp <= 0.0) throw validation_error("mass grid points must be positive");
        if (!std::isfinite(gamma)) throw validation_error("non-finite rate on the grid");
        grid.emplace_back(mp, mp * gamma);
    }
    return convention_scale(convention) * trapezoid(grid);
}

double integrate_rates_variance(const std::map<double, double>& var_by_mass,
                                RateConvention convention) {
    if (var_by_mass.size() < 2) {
        throw validation_error("integrate_rates_variance needs at least 2 grid points");
    }
    std::vector<std::pair<double, double>> grid(var_by_mass.begin(), var_by_mass.end());
    const double scale = convention_scale(convention);
    double var = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        double node_weight = 0.0;
        if (i > 0) node_weight += 0.5 * (grid[i].first - grid[i - 1].first);
        if (i + 1 < grid.size()) node_weight += 0.5 * (grid[i + 1].first - grid[i].first);
        const double c = scale * node_weight * grid[i].first;
        var += c * c * grid[i].second;
    }
    return var;
}

}  // namespace schwinger
