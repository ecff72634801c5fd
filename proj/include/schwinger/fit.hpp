#pragma once

#include <vector>

namespace schwinger {

struct FitPoint {
    double t = 0.0;
    double value = 0.0;
    double std_error = 0.0;  // 0 means exact (unweighted fit)
};

// Open time interval (strict inequalities). Grid times are products i * step,
// so the comparison carries a 1e-9 guard band to keep 3 * 0.05 out of a
// window ending at 0.15 regardless of rounding direction.
struct FitWindow {
    double t_min = 0.0;
    double t_max = 0.0;

    bool contains(double t) const { return t > t_min + 1e-9 && t < t_max - 1e-9; }
};

struct FitOptions {
    int max_iterations = 200;
    double tolerance = 1e-13;  // relative SSR change
};

struct FitResult {
    double gamma = 0.0;  // decay rate per unit volume-time
    double c1 = 0.0;     // free normalization
    double var_gamma = 0.0;
    double var_c1 = 0.0;
    double cov = 0.0;        // cov(gamma, c1)
    int points_used = 0;
    int iterations = 0;
    bool weighted = false;
    // The fitted model is c1 * exp(-gamma * volume * t).
    double volume = 0.0;
};

// Weighted nonlinear least squares of c1 * exp(-gamma * volume * t) on the
// points inside the window: Gauss-Newton (with step halving) seeded by the
// log-linear regression estimate. Weights are 1/std_error^2 when every
// windowed point has a positive error bar, otherwise the fit is unweighted
// (exact curves). Preconditions: at least 3 points in the window, all with
// value > 0. Throws numerical_error on singular normal equations or
// non-convergence.
FitResult fit_decay(const std::vector<FitPoint>& series, const FitWindow& window,
                    double volume, const FitOptions& options = {});

}  // namespace schwinger
