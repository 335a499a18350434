#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "commdet/sweep.hpp"

using namespace commdet;

namespace {

SweepSpec tiny_spec() {
    SweepSpec spec;
    spec.mu_start = 0.1;
    spec.mu_stop = 0.2;
    spec.mu_step = 0.1;
    spec.trials_per_point = 2;
    spec.n_values = {200};
    spec.lfr_base.n = 200;
    spec.lfr_base.avg_k = 12;
    spec.lfr_base.max_k = 30;
    spec.lfr_base.s_min = 15;
    spec.lfr_base.s_max = 60;
    spec.restarts = 3;
    return spec;
}

}  // namespace

TEST_CASE("parse_sweep_spec: keys, comments, defaults") {
    const char* text =
        "# figure 6 style grid\n"
        "mu_start = 0.1\n"
        "mu_stop=0.3\n"
        "mu_step =0.1\n"
        "n_values = 100, 200\n"
        "trials = 4\n"
        "objectives = f2, q\n"
        "seed = 9\n"
        "restarts = 5\n"
        "avg_k = 10\n"
        "max_k = 25\n"
        "gamma = 2.7\n"
        "beta = 1.2\n"
        "s_min = 12\n"
        "s_max = 40\n";
    SweepSpec spec = parse_sweep_spec(text);
    CHECK(spec.mu_start == doctest::Approx(0.1));
    CHECK(spec.mu_stop == doctest::Approx(0.3));
    CHECK(spec.n_values == std::vector<int>{100, 200});
    CHECK(spec.trials_per_point == 4);
    CHECK(spec.objectives ==
          std::vector<ModularityFunction>{ModularityFunction::f2, ModularityFunction::q});
    CHECK(spec.seed == 9);
    CHECK(spec.restarts == 5);
    CHECK(spec.lfr_base.avg_k == doctest::Approx(10));
    CHECK(spec.lfr_base.max_k == 25);
    CHECK(spec.lfr_base.gamma == doctest::Approx(2.7));
    CHECK(spec.lfr_base.beta == doctest::Approx(1.2));
    CHECK(spec.lfr_base.s_min == 12);
    CHECK(spec.lfr_base.s_max == 40);
}

TEST_CASE("parse_sweep_spec rejects unknown keys and junk") {
    CHECK_THROWS_AS(parse_sweep_spec("volume = 11\n"), ParseError);
    CHECK_THROWS_AS(parse_sweep_spec("mu_start\n"), ParseError);
}

TEST_CASE("sweep_point_seed separates grid points") {
    std::uint64_t a = sweep_point_seed(42, ModularityFunction::f2, 500, 0.10, 0);
    CHECK(a == sweep_point_seed(42, ModularityFunction::f2, 500, 0.10, 0));
    CHECK(a != sweep_point_seed(42, ModularityFunction::f2, 500, 0.10, 1));
    CHECK(a != sweep_point_seed(42, ModularityFunction::f2, 500, 0.15, 0));
    CHECK(a != sweep_point_seed(42, ModularityFunction::f2, 1000, 0.10, 0));
    CHECK(a != sweep_point_seed(42, ModularityFunction::q, 500, 0.10, 0));
    CHECK(a != sweep_point_seed(43, ModularityFunction::f2, 500, 0.10, 0));
}

TEST_CASE("run_sweep: shape, csv contract, determinism") {
    SweepSpec spec = tiny_spec();
    SweepResult r1 = run_sweep(spec);
    CHECK(r1.rows.size() == 2 * 2);     // two mu points x two trials
    CHECK(r1.summary.size() == 2);
    for (const SweepRow& row : r1.rows) {
        if (!row.ok) continue;
        CHECK(row.nmi >= 0.0);
        CHECK(row.nmi <= 1.0);
    }

    std::string csv = sweep_csv(r1);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "objective,n,mu,trial,nmi,seconds");
    int data_lines = 0;
    for (std::string line; std::getline(lines, line);)
        if (!line.empty()) ++data_lines;
    CHECK(data_lines == 4);

    // Same spec, same results; the seconds column is wall-clock and excluded.
    SweepResult r2 = run_sweep(spec);
    REQUIRE(r2.rows.size() == r1.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r1.rows[i].nmi == r2.rows[i].nmi);
        CHECK(r1.rows[i].ok == r2.rows[i].ok);
    }
}

TEST_CASE("run_sweep survives infeasible grid points") {
    SweepSpec spec = tiny_spec();
    spec.lfr_base.s_min = 25;
    spec.lfr_base.s_max = 28;  // too tight: assignment cannot fit max-degree nodes
    spec.trials_per_point = 1;
    spec.mu_stop = 0.1;
    SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 1);
    CHECK(!r.rows[0].ok);
    CHECK(!r.rows[0].error.empty());
    std::string csv = sweep_csv(r);
    CHECK(csv.find("error") != std::string::npos);
}

TEST_CASE("sweep summary json carries per-point stats") {
    SweepSpec spec = tiny_spec();
    SweepResult r = run_sweep(spec);
    std::string json = sweep_summary_json(r);
    CHECK(json.find("mean_nmi") != std::string::npos);
    CHECK(json.find("std_nmi") != std::string::npos);
    for (const SweepPointSummary& s : r.summary) {
        CHECK(s.mean_nmi >= 0.0);
        CHECK(s.mean_nmi <= 1.0);
        CHECK(s.std_nmi >= 0.0);
    }
}

TEST_CASE("run_table1 on the bundled datasets") {
    const char* dir = std::getenv("COMMDET_DATA_DIR");
    REQUIRE(dir != nullptr);
    std::vector<Table1Row> rows = run_table1(dir, /*seed=*/1, /*restarts=*/10);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].dataset == "karate");
    CHECK(rows[0].n == 34);
    CHECK(rows[0].l == 78);
    CHECK(rows[0].mean_degree == doctest::Approx(4.5882).epsilon(1e-4));
    CHECK(rows[0].detected_communities == 2);
    CHECK(rows[0].nmi == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rows[0].pass);
    CHECK(rows[1].dataset == "dolphins");
    CHECK(rows[1].n == 62);
    CHECK(rows[1].l == 159);
    CHECK(rows[1].mean_degree == doctest::Approx(5.129).epsilon(1e-3));
    CHECK(rows[2].dataset == "football");
    CHECK(rows[2].n == 115);
    CHECK(rows[2].l == 613);
    CHECK(rows[2].mean_degree == doctest::Approx(10.6609).epsilon(1e-4));

    std::string json = table1_json(rows);
    CHECK(json.find("karate") != std::string::npos);
    CHECK(json.find("dolphins") != std::string::npos);
    CHECK(json.find("football") != std::string::npos);
}

TEST_CASE("run_table1 reports a missing dataset by name") {
    CHECK_THROWS_WITH_AS(run_table1("/nonexistent-dir"), doctest::Contains("karate"), DataError);
}
