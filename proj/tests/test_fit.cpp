#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwinger/errors.hpp"
#include "schwinger/fit.hpp"
#include "schwinger/rng.hpp"

#include <cmath>
#include <vector>

using namespace schwinger;

namespace {

constexpr double kVolume = 2.25;

std::vector<FitPoint> synthetic(double gamma, double c1, double sigma = 0.0,
                                std::uint64_t seed = 0) {
    SplitMix64 rng(seed);
    std::vector<FitPoint> pts;
    for (int i = 0; i < 10; ++i) {
        const double t = 0.05 * i;
        double y = c1 * std::exp(-gamma * kVolume * t);
        if (sigma > 0.0) y += sigma * (rng.uniform() - 0.5) * 2.0;
        pts.push_back({t, y, sigma});
    }
    return pts;
}

}  // namespace

TEST_CASE("exact data is recovered to solver precision") {
    const auto pts = synthetic(0.56, 0.97);
    const FitResult fit = fit_decay(pts, FitWindow{-0.01, 0.46}, kVolume);
    CHECK(fit.gamma == doctest::Approx(0.56).epsilon(1e-10));
    CHECK(fit.c1 == doctest::Approx(0.97).epsilon(1e-10));
    CHECK_FALSE(fit.weighted);
    CHECK(fit.points_used == 10);
    CHECK(fit.volume == kVolume);
    CHECK(fit.var_gamma >= 0.0);
    CHECK(fit.var_gamma < 1e-12);  // residuals are numerically zero
}

TEST_CASE("windows are open intervals with a guard band") {
    const auto pts = synthetic(0.8, 1.0);
    // Endpoints on grid times: 0.05 and 0.25 are excluded, leaving 3 points.
    const FitResult fit = fit_decay(pts, FitWindow{0.05, 0.25}, kVolume);
    CHECK(fit.points_used == 3);
    CHECK(fit.gamma == doctest::Approx(0.8).epsilon(1e-9));

    // Nudging the bounds by less than the guard changes nothing.
    const FitResult nudged =
        fit_decay(pts, FitWindow{0.05 + 5e-10, 0.25 - 5e-10}, kVolume);
    CHECK(nudged.points_used == 3);
}

TEST_CASE("weights steer the fit") {
    auto pts = synthetic(0.56, 1.0);
    for (auto& p : pts) p.std_error = 0.01;
    // Corrupt one point but mark it as nearly worthless.
    pts[4].value *= 3.0;
    pts[4].std_error = 1e3;
    const FitResult fit = fit_decay(pts, FitWindow{-0.01, 0.46}, kVolume);
    CHECK(fit.weighted);
    CHECK(fit.gamma == doctest::Approx(0.56).epsilon(1e-5));
    CHECK(fit.var_gamma > 0.0);

    // The same corruption with uniform weights drags the rate away.
    for (auto& p : pts) p.std_error = 0.01;
    const FitResult dragged = fit_decay(pts, FitWindow{-0.01, 0.46}, kVolume);
    CHECK(std::abs(dragged.gamma - 0.56) > 0.05);
}

TEST_CASE("a single zero error bar downgrades to the unweighted fit") {
    auto pts = synthetic(0.7, 1.0);
    for (auto& p : pts) p.std_error = 0.01;
    pts[2].std_error = 0.0;
    const FitResult fit = fit_decay(pts, FitWindow{-0.01, 0.46}, kVolume);
    CHECK_FALSE(fit.weighted);
}

TEST_CASE("noisy data lands within its own error bars") {
    const double truth = 0.56;
    const auto pts = synthetic(truth, 1.0, 0.005, 42);
    FitResult fit = fit_decay(pts, FitWindow{-0.01, 0.46}, kVolume);
    CHECK(fit.weighted);
    CHECK(std::abs(fit.gamma - truth) < 4.0 * std::sqrt(fit.var_gamma));
}

TEST_CASE("input validation") {
    const auto pts = synthetic(0.5, 1.0);
    CHECK_THROWS_AS(fit_decay(pts, FitWindow{0.0, 0.11}, kVolume), validation_error);
    CHECK_THROWS_AS(fit_decay(pts, FitWindow{-0.01, 0.46}, 0.0), validation_error);
    CHECK_THROWS_AS(fit_decay({}, FitWindow{-0.01, 0.46}, kVolume), validation_error);

    auto negative = synthetic(0.5, 1.0);
    negative[3].value = -0.2;
    CHECK_THROWS_AS(fit_decay(negative, FitWindow{-0.01, 0.46}, kVolume),
                    validation_error);
}

TEST_CASE("a degenerate time grid is a numerical failure") {
    std::vector<FitPoint> flat = {{0.1, 0.9, 0.0}, {0.1, 0.8, 0.0}, {0.1, 0.7, 0.0}};
    CHECK_THROWS_AS(fit_decay(flat, FitWindow{0.0, 0.2}, kVolume), numerical_error);
}

TEST_CASE("growing curves fit with a negative rate") {
    std::vector<FitPoint> rising;
    for (int i = 0; i < 6; ++i) {
        const double t = 0.05 * i;
        rising.push_back({t, 0.5 * std::exp(0.3 * kVolume * t), 0.0});
    }
    const FitResult fit = fit_decay(rising, FitWindow{-0.01, 0.46}, kVolume);
    CHECK(fit.gamma == doctest::Approx(-0.3).epsilon(1e-9));
}
