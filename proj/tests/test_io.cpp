#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schwinger/errors.hpp"
#include "schwinger/io.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace schwinger;

TEST_CASE("series CSV uses a fixed layout") {
    DecaySeries series;
    series.mprime = 1.4;
    series.points = {{0.0, 1.0, 0.0}, {0.05, 0.25, 0.0125}};
    CHECK(series_to_csv(series) == "t,pvac,stderr\n0,1,0\n0.05,0.25,0.0125\n");

    DecaySeries empty;
    CHECK(series_to_csv(empty) == "t,pvac,stderr\n");
}

TEST_CASE("counts serialize with ordered keys") {
    Counts counts;
    counts.qubit_count = 2;
    counts.total = 8;
    counts.histogram = {{"01", 3}, {"10", 5}};
    CHECK(counts_to_json(counts) ==
          "{\n"
          "  \"counts\": {\n"
          "    \"01\": 3,\n"
          "    \"10\": 5\n"
          "  },\n"
          "  \"total\": 8\n"
          "}\n");
}

TEST_CASE("vqe records round-trip through JSON") {
    VqeResult result;
    result.params.theta = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    result.energy = -4.4498;
    result.fidelity = 0.9999;
    result.converged = true;
    result.evaluations = 1234;

    const auto j = nlohmann::json::parse(vqe_record_to_json(1.4, 0.45, result));
    CHECK(j.at("mprime") == 1.4);
    CHECK(j.at("a") == 0.45);
    CHECK(j.at("eE") == 0.0);
    CHECK(j.at("theta").size() == 9);
    CHECK(j.at("theta")[2] == 0.3);
    CHECK(j.at("energy") == -4.4498);
    CHECK(j.at("fidelity") == 0.9999);
    CHECK(j.at("converged").get<bool>());
    CHECK(j.at("evaluations") == 1234);
}

TEST_CASE("rate tables map non-finite values to null") {
    RateTable table;
    table.mode = RunMode::Noisy;
    table.volume = 2.25;
    table.complete = false;
    table.gamma_3p1_literal = std::numeric_limits<double>::quiet_NaN();
    table.gamma_3p1_paper = std::numeric_limits<double>::quiet_NaN();
    table.err_3p1_literal = std::numeric_limits<double>::quiet_NaN();
    table.err_3p1_paper = std::numeric_limits<double>::quiet_NaN();

    MassRate good;
    good.mprime = 1.0;
    good.window = {0.15, 0.35};
    good.ok = true;
    good.fit.gamma = 0.5;
    good.fit.c1 = 0.9;
    good.fit.points_used = 3;
    good.c1_in_range = true;
    MassRate bad;
    bad.mprime = 1.2;
    bad.window = {0.15, 0.40};
    bad.ok = false;
    bad.error = "too few points";
    table.rows = {good, bad};

    const auto j = nlohmann::json::parse(rate_table_to_json(table, RateConvention::Literal));
    CHECK(j.at("mode") == "noisy");
    CHECK(j.at("volume") == 2.25);
    CHECK_FALSE(j.at("complete").get<bool>());
    CHECK(j.at("gamma_3p1").at("literal").is_null());
    CHECK(j.at("gamma_3p1_reported").is_null());
    CHECK(j.at("reported_convention") == "literal");

    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("gamma") == 0.5);
    CHECK(j.at("rows")[0].at("c1_in_range").get<bool>());
    CHECK_FALSE(j.at("rows")[0].contains("error"));
    CHECK(j.at("rows")[1].at("error") == "too few points");
    CHECK_FALSE(j.at("rows")[1].contains("gamma"));
}

TEST_CASE("config echo resolves every fit window") {
    ExperimentConfig config = default_config();
    config.window_overrides[format_mass(1.4)] = FitWindow{0.10, 0.45};
    const auto j = nlohmann::json::parse(config_to_json(config));
    CHECK(j.at("lattice").at("a") == 0.45);
    CHECK(j.at("seed") == 7);
    CHECK(j.at("modes").size() == 4);
    CHECK(j.at("fit_windows").at("1.4")[0] == 0.10);
    CHECK(j.at("fit_windows").at("1.4")[1] == 0.45);
    CHECK(j.at("fit_windows").at("1.6")[1] == 0.42);

    const auto meta = nlohmann::json::parse(meta_to_json(config));
    CHECK(meta.at("artifact") == "schwinger-pairs");
    CHECK(meta.at("config").at("n_shot") == 8192);
}

TEST_CASE("write_file creates parent directories") {
    const std::filesystem::path dir = "io_tmp_dir";
    std::filesystem::remove_all(dir);

    const std::filesystem::path path = dir / "a" / "b.txt";
    write_file(path.string(), "payload");
    std::ifstream in(path);
    std::string content;
    std::getline(in, content);
    CHECK(content == "payload");

    write_file(path.string(), "replaced");
    std::ifstream again(path);
    std::getline(again, content);
    CHECK(content == "replaced");

    std::filesystem::remove_all(dir);
}
