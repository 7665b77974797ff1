#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "spanet/io.hpp"

namespace spanet {

// Resolved experiment settings. Config-file keys carry the section-qualified
// names below; command-line flags of the same name override them.
struct ExperimentConfig {
    // model (section [model])
    std::string model = "spa"; // spa | rgg
    int m = 2;
    double A1 = 0.5;
    double A2 = 20.0;
    double p = 1.0;
    std::vector<uint64_t> n_list = {4096, 8192, 16384, 32768, 65536};
    std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
    uint64_t N = 20000;                    // rgg vertex count
    std::vector<double> M_list = {2.0, 8.0}; // rgg densities pi N r^2

    // protocol (section [protocol])
    std::string protocol = "push-and-pull";
    uint64_t max_rounds = 1u << 20;

    // metrics (section [metrics])
    double fraction = 0.9;
    uint64_t pairs = 2000;
    double beta = 0.5;
    double eta = 0.1;
    uint64_t min_deg = 50;
    uint64_t stretch_pairs = 200;
    double gamma_hat = 1.0;

    // assertions (section [assert])
    double diam_const = 5.0;    // effdiam <= diam_const * log^2 n
    double ratio_growth = 1.5;  // effdiam/log^2 n growth cap across the sweep
    double slope_min = 0.1;     // fitted spread-time exponent lower bound
    double doubling_tol = 0.15; // relative tolerance around 2^{pA1}
    double outdeg_const = 20.0; // max outdegree <= outdeg_const * log^2 n
    double traj_exp = 0.1;      // trajectory statistic growth cap n^traj_exp

    // output (section [output])
    std::string out_dir = "runs";
    bool write_graphs = false;

    static ExperimentConfig from_config(const KeyValueConfig& kv);
    void apply_overrides(const KeyValueConfig& kv);
    std::string describe() const; // key = value lines, config-file syntax
};

struct ExperimentResult {
    bool pass = false;
    std::string summary_json;
    std::vector<std::string> failures;
};

// name: diameter | rumour | percolation | degree-laws.
// Writes per-run CSVs under cfg.out_dir and a <name>_summary.json; throws
// std::invalid_argument for unknown names and io_error on unwritable paths.
ExperimentResult run_experiment(const std::string& name, const ExperimentConfig& cfg);

// helpers shared with the acceptance suite
double median(std::vector<double> values);
// linear-interpolated quantile, q in [0,1]
double quantile(std::vector<double> values, double q);
// least-squares slope of log(y) against log(x)
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace spanet
