#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwinger/circuit.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/lattice.hpp"
#include "schwinger/pipeline.hpp"
#include "schwinger/statevector.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace schwinger;

namespace {

// P_vac(t) for m' = 1.4 from dense diagonalization of the staggered
// Hamiltonian (independent high-precision computation, frozen here).
constexpr double kExactCurve14[10] = {
    1.0,
    0.927838195203370,
    0.748741394247119,
    0.540566639737231,
    0.362637819288022,
    0.233642089748499,
    0.146667660224162,
    0.089853006436016,
    0.056674901033937,
    0.045563804659846,
};

double ideal_pvac(Pipeline& pipeline, double mprime, double t) {
    Statevector state = Statevector::basis(vacuum_bits(5));
    apply(state, pipeline.end_to_end_circuit(mprime, t));
    return std::norm(state.amplitude(vacuum_bits(5)));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("exact decay curve reproduces the dense reference") {
    Pipeline pipeline(default_config());
    const DecaySeries series = pipeline.run_curve(1.4, RunMode::Exact);

    REQUIRE(series.points.size() == 10);
    CHECK(series.mprime == 1.4);
    CHECK(series.mode == RunMode::Exact);
    CHECK(series.vqe_fidelity == 1.0);
    CHECK_FALSE(series.degraded);
    for (int i = 0; i < 10; ++i) {
        const auto& p = series.points[static_cast<size_t>(i)];
        CHECK(p.t == i * 0.05);
        CHECK(std::abs(p.pvac - kExactCurve14[i]) < 1e-9);
        CHECK(p.std_error == 0.0);
    }
    CHECK(std::abs(series.points[0].pvac - 1.0) < 1e-12);
}

TEST_CASE("end-to-end circuit stays within the CNOT budget") {
    Pipeline pipeline(default_config());
    const Circuit circuit = pipeline.end_to_end_circuit(1.4, 0.3);
    CHECK(circuit.qubit_count == 5);
    CHECK(circuit.cnot_count() == 40);  // 8 prepare + 3*8 evolve + 8 unprepare
    CHECK(pipeline.end_to_end_circuit(1.0, 0.0).cnot_count() == 40);
}

TEST_CASE("noiseless sampling tracks the circuit probabilities") {
    Pipeline pipeline(default_config());
    const DecaySeries series = pipeline.run_curve(1.4, RunMode::Noiseless);
    REQUIRE(series.points.size() == 10);
    CHECK(series.vqe_fidelity >= 0.99);
    CHECK_FALSE(series.degraded);

    const double n = 8192.0;
    for (const auto& point : series.points) {
        const double p = ideal_pvac(pipeline, 1.4, point.t);
        const double sigma = std::sqrt(std::max(p * (1.0 - p), 0.0) / n);
        CHECK(std::abs(point.pvac - p) <= 4.0 * sigma + 1e-9);
    }
    // t = 0 leaves the prepared state untouched up to rounding
    CHECK(series.points[0].pvac == 1.0);

    // the reported error bar is the binomial estimate
    const auto& mid = series.points[4];
    CHECK(std::abs(mid.std_error - std::sqrt(mid.pvac * (1.0 - mid.pvac) / n)) < 1e-12);
}

TEST_CASE("post-selection pulls noisy curves back toward the ideal") {
    Pipeline pipeline(default_config());
    const DecaySeries noisy = pipeline.run_curve(1.4, RunMode::Noisy);
    const DecaySeries corrected = pipeline.run_curve(1.4, RunMode::Corrected);
    REQUIRE(noisy.points.size() == 10);
    REQUIRE(corrected.points.size() == 10);

    double noisy_bias = 0.0, corrected_bias = 0.0;
    for (size_t i = 0; i < 10; ++i) {
        const double p = ideal_pvac(pipeline, 1.4, noisy.points[i].t);
        noisy_bias += std::abs(noisy.points[i].pvac - p);
        corrected_bias += std::abs(corrected.points[i].pvac - p);
        CHECK(noisy.points[i].pvac >= 0.0);
        CHECK(noisy.points[i].pvac <= 1.0);
        CHECK(corrected.points[i].pvac >= 0.0);
        CHECK(corrected.points[i].pvac <= 1.0);
    }
    CHECK(corrected_bias < noisy_bias);
}

TEST_CASE("sampling seeds factorize over the grid") {
    ExperimentConfig trimmed = default_config();
    trimmed.mass_grid = {1.4};

    Pipeline full(default_config());
    Pipeline single(trimmed);

    const DecaySeries a = full.run_curve(1.4, RunMode::Noisy);
    const DecaySeries b = single.run_curve(1.4, RunMode::Noisy);
    const DecaySeries c = full.run_curve(1.4, RunMode::Noisy);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].pvac == b.points[i].pvac);
        CHECK(a.points[i].std_error == b.points[i].std_error);
        CHECK(a.points[i].pvac == c.points[i].pvac);
    }

    // run_mode reuses exactly the same per-point streams
    const ModeRun mode_run = single.run_mode(RunMode::Noisy);
    REQUIRE(mode_run.series.size() == 1);
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(mode_run.series[0].points[i].pvac == a.points[i].pvac);
    }
}

TEST_CASE("fit_series applies windows and isolates failures") {
    Pipeline pipeline(default_config());
    const DecaySeries series = pipeline.run_curve(1.4, RunMode::Exact);

    const MassRate row = pipeline.fit_series(series);
    REQUIRE(row.ok);
    CHECK(row.window.t_min == 0.15);
    CHECK(row.window.t_max == 0.40);
    CHECK(row.fit.points_used == 4);
    CHECK(row.error.empty());
    // the fitted rate lands close to the analytic 1+1D value 4.2273
    CHECK(std::abs(row.fit.gamma - 4.2273131154658808) / 4.2273131154658808 < 0.05);
    // extrapolating the late-time exponential past the quadratic onset
    // overshoots c1 = 1, which the soft range flag reports
    CHECK(row.fit.c1 > 1.5);
    CHECK(row.c1_in_range == (row.fit.c1 > 0.0 && row.fit.c1 <= 1.5));

    const FitWindow wide{0.10, 0.45};
    const MassRate wide_row = pipeline.fit_series(series, &wide);
    REQUIRE(wide_row.ok);
    CHECK(wide_row.fit.points_used == 6);
    CHECK(wide_row.fit.gamma != row.fit.gamma);

    // growing curves are rejected as unphysical
    DecaySeries rising = series;
    for (size_t i = 0; i < rising.points.size(); ++i) {
        rising.points[i].pvac = 0.1 * std::exp(0.8 * rising.points[i].t);
    }
    const MassRate bad = pipeline.fit_series(rising);
    CHECK_FALSE(bad.ok);
    CHECK(bad.error.find("negative") != std::string::npos);

    // nonpositive probabilities cannot be fitted
    DecaySeries dead = series;
    dead.points[5].pvac = 0.0;
    CHECK_FALSE(pipeline.fit_series(dead).ok);
}

TEST_CASE("mode run assembles the transverse integral") {
    Pipeline pipeline(default_config());
    const ModeRun run = pipeline.run_mode(RunMode::Exact);

    CHECK(run.table.mode == RunMode::Exact);
    CHECK(run.table.volume == doctest::Approx(2.25).epsilon(1e-15));
    REQUIRE(run.table.rows.size() == 6);
    CHECK(run.table.complete);
    for (const auto& row : run.table.rows) {
        CHECK(row.ok);
        CHECK(row.fit.gamma > 0.0);
    }
    CHECK(run.series.size() == 6);

    // the 1+1D rate falls with the effective mass
    for (size_t i = 1; i < run.table.rows.size(); ++i) {
        CHECK(run.table.rows[i].fit.gamma < run.table.rows[i - 1].fit.gamma);
    }

    // the two conventions differ by exactly one factor of pi
    CHECK(run.table.gamma_3p1_literal ==
          doctest::Approx(run.table.gamma_3p1_paper * M_PI).epsilon(1e-12));
    CHECK(run.table.err_3p1_literal ==
          doctest::Approx(run.table.err_3p1_paper * M_PI).epsilon(1e-12));
    CHECK(run.table.gamma_3p1_paper > 0.3);
    CHECK(run.table.gamma_3p1_paper < 0.9);
}

TEST_CASE("a failing mass does not abort the others") {
    ExperimentConfig config = default_config();
    config.mass_grid = {1.0, 1.4};
    // window is inside the span but contains no grid points
    config.window_overrides[format_mass(1.0)] = FitWindow{0.16, 0.17};
    Pipeline pipeline(config);

    const ModeRun run = pipeline.run_mode(RunMode::Exact);
    REQUIRE(run.table.rows.size() == 2);
    CHECK_FALSE(run.table.rows[0].ok);
    CHECK_FALSE(run.table.rows[0].error.empty());
    CHECK(run.table.rows[1].ok);
    CHECK_FALSE(run.table.complete);
    // fewer than two fitted masses leave no integral
    CHECK(std::isnan(run.table.gamma_3p1_paper));
    CHECK(std::isnan(run.table.err_3p1_literal));
}

TEST_CASE("benchmark output is byte-identical across reruns") {
    ExperimentConfig config = default_config();
    config.mass_grid = {1.0, 1.4};
    config.modes = {RunMode::Exact, RunMode::Corrected};
    config.n_shot = 2000;

    const std::filesystem::path dir_a = "pipeline_bench_a";
    const std::filesystem::path dir_b = "pipeline_bench_b";
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);

    const auto tables_a = run_benchmark(config, dir_a.string());
    const auto tables_b = run_benchmark(config, dir_b.string());

    REQUIRE(tables_a.size() == 2);
    REQUIRE(tables_a.count(RunMode::Corrected) == 1);
    CHECK(tables_a.at(RunMode::Corrected).rows.size() == 2);
    CHECK(tables_a.at(RunMode::Corrected).gamma_3p1_paper ==
          tables_b.at(RunMode::Corrected).gamma_3p1_paper);

    const std::vector<std::string> artifacts = {
        "rates.json",          "meta.json",
        "vqe/vqe_1.json",      "vqe/vqe_1.4.json",
        "curves/exact_1.csv",  "curves/exact_1.4.csv",
        "curves/corrected_1.csv", "curves/corrected_1.4.csv",
    };
    for (const auto& name : artifacts) {
        INFO("artifact: " << name);
        REQUIRE(std::filesystem::exists(dir_a / name));
        CHECK(read_file(dir_a / name) == read_file(dir_b / name));
    }

    // rates.json is valid JSON and reports the configured convention
    const auto rates = nlohmann::json::parse(read_file(dir_a / "rates.json"));
    CHECK(rates.at("modes").at("corrected").at("reported_convention") == "paper_match");
    CHECK(rates.at("modes").at("exact").at("complete").get<bool>());

    // exact curves start from certainty
    const std::string csv = read_file(dir_a / "curves/exact_1.csv");
    CHECK(csv.rfind("t,pvac,stderr\n0,1,0\n", 0) == 0);

    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
}

TEST_CASE("pipeline validates its inputs") {
    ExperimentConfig bad = default_config();
    bad.n_t = 0;
    CHECK_THROWS_AS(Pipeline{bad}, validation_error);

    Pipeline pipeline(default_config());
    CHECK_THROWS_AS(pipeline.run_curve(-1.0, RunMode::Exact), validation_error);
}
