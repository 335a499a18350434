#include "commdet/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "commdet/eval.hpp"

#include <nlohmann/json.hpp>

namespace commdet {

namespace {

std::vector<std::string> split_csv(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = item.find_last_not_of(" \t");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string format_double(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

SweepSpec parse_sweep_spec(std::string_view text) {
    SweepSpec spec;
    std::stringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("sweep spec line " + std::to_string(line_no) + ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "mu_start") spec.mu_start = std::stod(value);
            else if (key == "mu_stop") spec.mu_stop = std::stod(value);
            else if (key == "mu_step") spec.mu_step = std::stod(value);
            else if (key == "trials") spec.trials_per_point = std::stoi(value);
            else if (key == "seed") spec.seed = std::stoull(value);
            else if (key == "restarts") spec.restarts = std::stoi(value);
            else if (key == "avg_k") spec.lfr_base.avg_k = std::stod(value);
            else if (key == "max_k") spec.lfr_base.max_k = std::stoi(value);
            else if (key == "gamma") spec.lfr_base.gamma = std::stod(value);
            else if (key == "beta") spec.lfr_base.beta = std::stod(value);
            else if (key == "s_min") spec.lfr_base.s_min = std::stoi(value);
            else if (key == "s_max") spec.lfr_base.s_max = std::stoi(value);
            else if (key == "n_values") {
                spec.n_values.clear();
                for (const auto& item : split_csv(value)) spec.n_values.push_back(std::stoi(item));
            } else if (key == "objectives") {
                spec.objectives.clear();
                for (const auto& item : split_csv(value)) spec.objectives.push_back(parse_modularity(item));
            } else {
                throw ParseError("sweep spec line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("sweep spec line " + std::to_string(line_no) + ": bad value '" + value + "'");
        }
    }
    if (spec.mu_start < 0.0 || spec.mu_stop >= 1.0 || spec.mu_step <= 0.0)
        throw DataError("sweep spec: mu grid must lie in [0, 1)");
    if (spec.trials_per_point < 1) throw DataError("sweep spec: trials must be >= 1");
    return spec;
}

std::uint64_t sweep_point_seed(std::uint64_t base, ModularityFunction objective, int n, double mu,
                               int trial) {
    // splitmix64 over the point coordinates
    auto mix = [](std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    };
    std::uint64_t h = mix(base);
    h = mix(h ^ static_cast<std::uint64_t>(objective));
    h = mix(h ^ static_cast<std::uint64_t>(n));
    h = mix(h ^ static_cast<std::uint64_t>(std::llround(mu * 10000.0)));
    h = mix(h ^ static_cast<std::uint64_t>(trial));
    return h;
}

SweepResult run_sweep(const SweepSpec& spec) {
    SweepResult result;
    std::vector<double> mu_grid;
    for (double mu = spec.mu_start; mu <= spec.mu_stop + 1e-9; mu += spec.mu_step)
        mu_grid.push_back(std::round(mu * 10000.0) / 10000.0);

    for (ModularityFunction objective : spec.objectives) {
        for (int n : spec.n_values) {
            for (double mu : mu_grid) {
                double sum = 0.0, sumsq = 0.0;
                int ok_trials = 0;
                for (int trial = 0; trial < spec.trials_per_point; ++trial) {
                    SweepRow row;
                    row.objective = objective;
                    row.n = n;
                    row.mu = mu;
                    row.trial = trial;
                    auto t0 = std::chrono::steady_clock::now();
                    try {
                        LfrParams params = spec.lfr_base;
                        params.n = n;
                        params.mu = mu;
                        std::uint64_t seed = sweep_point_seed(spec.seed, objective, n, mu, trial);
                        GeneratedNetwork net = gen_lfr(params, seed);
                        DetectionConfig config;
                        config.objective = objective;
                        config.restarts = spec.restarts;
                        config.seed = seed;
                        DetectionResult det = detect(net.graph, config);
                        row.nmi = nmi(net.ground_truth, det.partition);
                        sum += row.nmi;
                        sumsq += row.nmi * row.nmi;
                        ++ok_trials;
                    } catch (const std::exception& ex) {
                        row.ok = false;
                        row.error = ex.what();
                    }
                    auto t1 = std::chrono::steady_clock::now();
                    row.seconds =
                        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() / 1000.0;
                    result.rows.push_back(std::move(row));
                }
                SweepPointSummary s;
                s.objective = objective;
                s.n = n;
                s.mu = mu;
                s.trials = ok_trials;
                if (ok_trials > 0) {
                    s.mean_nmi = sum / ok_trials;
                    double var = sumsq / ok_trials - s.mean_nmi * s.mean_nmi;
                    s.std_nmi = std::sqrt(std::max(0.0, var));
                }
                result.summary.push_back(s);
            }
        }
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "objective,n,mu,trial,nmi,seconds\n";
    for (const SweepRow& row : result.rows) {
        out += std::string(modularity_name(row.objective)) + ",";
        out += std::to_string(row.n) + ",";
        out += format_double(row.mu, 4) + ",";
        out += std::to_string(row.trial) + ",";
        out += row.ok ? format_double(row.nmi, 6) : "error:" + row.error;
        out += "," + format_double(row.seconds, 3) + "\n";
    }
    return out;
}

std::string sweep_summary_json(const SweepResult& result) {
    nlohmann::json points = nlohmann::json::array();
    for (const SweepPointSummary& s : result.summary) {
        points.push_back({{"objective", std::string(modularity_name(s.objective))},
                          {"n", s.n},
                          {"mu", s.mu},
                          {"trials", s.trials},
                          {"mean_nmi", s.mean_nmi},
                          {"std_nmi", s.std_nmi}});
    }
    return nlohmann::json{{"points", points}}.dump(2) + "\n";
}

std::vector<Table1Row> run_table1(const std::string& datasets_dir, std::uint64_t seed, int restarts) {
    struct Expect {
        const char* name;
        int n;
        long long l;
        double mean_degree;
        int communities;
        double nmi;
        double tol;
    };
    const Expect expectations[] = {
        {"karate", 34, 78, 4.5882, 2, 1.0, 1e-9},
        {"dolphins", 62, 159, 5.129, 5, 0.8904, 0.02},
        {"football", 115, 613, 10.6609, 12, 0.9429, 0.02},
    };

    std::vector<Table1Row> rows;
    for (const Expect& e : expectations) {
        std::string graph_path = datasets_dir + "/" + e.name + ".gml";
        std::string ref_path = datasets_dir + "/" + e.name + ".ref.tsv";
        Graph graph = load_graph_file(graph_path, GraphFormat::gml);
        Partition reference = load_partition_file(ref_path, graph);

        DetectionConfig config;
        config.restarts = restarts;
        config.seed = seed;
        DetectionResult det = detect(graph, config);

        Table1Row row;
        row.dataset = e.name;
        row.n = graph.node_count();
        row.l = static_cast<long long>(graph.edge_count());
        row.mean_degree = graph.mean_degree();
        row.detected_communities = det.partition.community_count();
        row.nmi = nmi(reference, det.partition);
        row.expected_n = e.n;
        row.expected_l = e.l;
        row.expected_mean_degree = e.mean_degree;
        row.expected_communities = e.communities;
        row.expected_nmi = e.nmi;
        row.nmi_tolerance = e.tol;
        row.pass = row.n == e.n && row.l == e.l &&
                   std::abs(row.mean_degree - e.mean_degree) < 1e-3 &&
                   row.detected_communities == e.communities &&
                   std::abs(row.nmi - e.nmi) <= e.tol;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table1_json(const std::vector<Table1Row>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const Table1Row& r : rows) {
        out.push_back({{"dataset", r.dataset},
                       {"n", r.n},
                       {"l", r.l},
                       {"mean_degree", r.mean_degree},
                       {"detected_communities", r.detected_communities},
                       {"nmi", r.nmi},
                       {"expected",
                        {{"n", r.expected_n},
                         {"l", r.expected_l},
                         {"mean_degree", r.expected_mean_degree},
                         {"communities", r.expected_communities},
                         {"nmi", r.expected_nmi},
                         {"nmi_tolerance", r.nmi_tolerance}}},
                       {"pass", r.pass}});
    }
    return out.dump(2) + "\n";
}

}  // namespace commdet
