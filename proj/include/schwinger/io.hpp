#pragma once

// Serialization of pipeline results: CSV curves for plotting and JSON records
// for everything else. All output is deterministic (fixed float formatting,
// ordered keys) so identical runs produce identical bytes.

#include "schwinger/config.hpp"
#include "schwinger/pipeline.hpp"
#include "schwinger/sampling.hpp"
#include "schwinger/vqe.hpp"

#include <map>
#include <string>

namespace schwinger {

// Header `t,pvac,stderr`, one row per time point, %.12g formatting.
std::string series_to_csv(const DecaySeries& series);

// {bitstring: count} plus total.
std::string counts_to_json(const Counts& counts);

std::string vqe_record_to_json(double mprime, double a, const VqeResult& result);

std::string rate_tables_to_json(const std::map<RunMode, RateTable>& tables,
                                RateConvention reported);
std::string rate_table_to_json(const RateTable& table, RateConvention reported);

// Fully-resolved config echo (per-mass windows included).
std::string config_to_json(const ExperimentConfig& config);

std::string meta_to_json(const ExperimentConfig& config);

void write_file(const std::string& path, const std::string& content);

}  // namespace schwinger
