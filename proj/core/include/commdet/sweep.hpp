#pragma once

#include <string>
#include <vector>

#include "commdet/detect.hpp"
#include "commdet/synth.hpp"

namespace commdet {

struct SweepSpec {
    double mu_start = 0.05;
    double mu_stop = 0.75;
    double mu_step = 0.05;
    std::vector<int> n_values{500};
    int trials_per_point = 10;
    LfrParams lfr_base;
    std::vector<ModularityFunction> objectives{ModularityFunction::f2};
    std::uint64_t seed = 42;
    int restarts = 10;
};

/// Parse a key=value sweep description (one key per line, `#` comments).
/// Keys: mu_start, mu_stop, mu_step, n_values (comma separated), trials,
/// objectives (comma separated), seed, restarts, avg_k, max_k, gamma, beta,
/// s_min, s_max.
SweepSpec parse_sweep_spec(std::string_view text);

struct SweepRow {
    ModularityFunction objective;
    int n = 0;
    double mu = 0.0;
    int trial = 0;
    double nmi = 0.0;
    double seconds = 0.0;
    bool ok = true;
    std::string error;
};

struct SweepPointSummary {
    ModularityFunction objective;
    int n = 0;
    double mu = 0.0;
    int trials = 0;
    double mean_nmi = 0.0;
    double std_nmi = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SweepPointSummary> summary;
};

/// Stable per-point RNG seed so grid points are independent and resumable.
std::uint64_t sweep_point_seed(std::uint64_t base, ModularityFunction objective, int n, double mu,
                               int trial);

SweepResult run_sweep(const SweepSpec& spec);

/// CSV `objective,n,mu,trial,nmi,seconds`; failed points carry an error flag.
std::string sweep_csv(const SweepResult& result);

std::string sweep_summary_json(const SweepResult& result);

struct Table1Row {
    std::string dataset;
    int n = 0;
    long long l = 0;
    double mean_degree = 0.0;
    int detected_communities = 0;
    double nmi = 0.0;
    // expectations
    int expected_n = 0;
    long long expected_l = 0;
    double expected_mean_degree = 0.0;
    int expected_communities = 0;
    double expected_nmi = 0.0;
    double nmi_tolerance = 0.0;
    bool pass = false;
};

/// Re-derive the real-network summary table from bundled datasets:
/// recompute N, L, mean degree, run detection and score NMI against the
/// bundled reference partitions.
std::vector<Table1Row> run_table1(const std::string& datasets_dir, std::uint64_t seed = 42,
                                  int restarts = 10);

std::string table1_json(const std::vector<Table1Row>& rows);

}  // namespace commdet
