#pragma once

#include <map>

namespace schwinger {

// m' = sqrt(m^2 + p_perp^2): the effective (1+1)D mass of one transverse
// momentum mode of the (3+1)D problem.
double effective_mass(double m, double p_perp);

// Closed-form pair-production rate per unit length in (1+1)D for a constant
// field: (eE / 2pi) * |ln(1 - exp(-pi m^2 / eE))|. The logarithm is negative
// as printed in the source expression; the absolute value makes the rate
// nonnegative. eE = 0 returns 0; m = 0 with eE > 0 diverges and throws.
double analytic_rate_1p1(double m, double eE);

enum class RateConvention {
    Literal,    // (1/pi) * integral of m' * Gamma_1p1(m') dm'
    PaperMatch, // the literal value divided by pi
};

// Transverse-momentum integral assembling the (3+1)D rate from (1+1)D rates
// on a uniform m' grid via the trapezoid rule. m' runs over
// [m, sqrt(m^2 + p_perp_max^2)] with the given grid step (the final interval
// is shortened if the step does not divide the range exactly).
double analytic_rate_3p1(double m, double eE, double p_perp_max, double grid_step,
                         RateConvention convention);

// The same quadrature applied to externally supplied rates (fitted ones).
// Keys are m' grid points, strictly increasing.
double integrate_rates(const std::map<double, double>& gamma_by_mass,
                       RateConvention convention);

// Error propagation through the same trapezoid: variance of the integral
// given independent per-mass rate variances.
double integrate_rates_variance(const std::map<double, double>& var_by_mass,
                                RateConvention convention);

}  // namespace schwinger
