// Command-line front end: detection, scoring, centrality, partition
// comparison, synthetic generators and the benchmark harness.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commdet/centrality.hpp"
#include "commdet/detect.hpp"
#include "commdet/eval.hpp"
#include "commdet/graph.hpp"
#include "commdet/modularity.hpp"
#include "commdet/sweep.hpp"
#include "commdet/synth.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw commdet::DataError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw commdet::DataError("cannot write file: " + path);
    out << content;
}

commdet::Graph load_input(const std::string& path, const std::string& format) {
    return commdet::load_graph_file(path, commdet::parse_graph_format(format));
}

struct DetectArgs {
    std::string input, format = "edgelist", modularity = "f2", tie_break = "random";
    std::string output, report;
    int restarts = 10;
    std::uint64_t seed = 42;
    double threshold = 0.0;
    bool accept_zero_gain = false;
};

int cmd_detect(const DetectArgs& args) {
    commdet::Graph graph = load_input(args.input, args.format);
    commdet::DetectionConfig config;
    config.objective = commdet::parse_modularity(args.modularity);
    config.restarts = args.restarts;
    config.seed = args.seed;
    config.lci_threshold = args.threshold;
    config.tie_break = args.tie_break == "deterministic" ? commdet::TieBreak::deterministic
                                                         : commdet::TieBreak::random;
    config.zero_gain = args.accept_zero_gain ? commdet::ZeroGain::accept : commdet::ZeroGain::reject;

    commdet::DetectionResult result = commdet::detect(graph, config);
    std::string partition_text = commdet::write_partition(result.partition, graph);
    if (args.output.empty()) {
        std::cout << partition_text;
    } else {
        write_file(args.output, partition_text);
    }

    if (!args.report.empty()) {
        auto labels_of = [&](const std::vector<commdet::NodeId>& nodes) {
            std::vector<std::string> out;
            for (commdet::NodeId v : nodes) out.push_back(graph.label(v));
            return out;
        };
        json paths = json::object();
        for (const auto& [v, u] : result.residual_paths) paths[graph.label(v)] = graph.label(u);
        json communities = json::array();
        for (const auto& community : result.partition.communities()) communities.push_back(labels_of(community));
        json report{{"objective", args.modularity},
                    {"objective_value", result.objective_value},
                    {"restart_index", result.restart_index},
                    {"community_count", result.partition.community_count()},
                    {"communities", communities},
                    {"central_nodes", labels_of(result.central_nodes)},
                    {"residual_nodes", labels_of(result.residual_nodes)},
                    {"residual_paths", paths},
                    {"per_restart_scores", result.per_restart_scores},
                    {"unreachable_singletons", result.unreachable_singletons}};
        write_file(args.report, report.dump(2) + "\n");
    }
    return 0;
}

int cmd_score(const std::string& input, const std::string& format, const std::string& partition_path,
              const std::string& modularity, double alpha) {
    commdet::Graph graph = load_input(input, format);
    commdet::Partition partition = commdet::load_partition_file(partition_path, graph);
    commdet::ModularityScore score =
        commdet::score_partition(graph, partition, commdet::parse_modularity(modularity), alpha);
    json out{{"function", std::string(commdet::modularity_name(score.function))},
             {"value", score.value},
             {"per_community", score.per_community}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_centrality(const std::string& input, const std::string& format, const std::string& indicator,
                   int k, double threshold) {
    commdet::Graph graph = load_input(input, format);
    commdet::CentralityIndicator ind = commdet::parse_indicator(indicator);
    std::set<commdet::NodeId> central;
    switch (ind) {
        case commdet::CentralityIndicator::lci: {
            auto nodes = commdet::central_nodes(graph, threshold);
            central.insert(nodes.begin(), nodes.end());
            break;
        }
        case commdet::CentralityIndicator::gmd: {
            auto nodes = commdet::global_max_degree_nodes(graph, k);
            central.insert(nodes.begin(), nodes.end());
            break;
        }
        case commdet::CentralityIndicator::lmd: {
            auto nodes = commdet::local_max_degree_nodes(graph);
            central.insert(nodes.begin(), nodes.end());
            break;
        }
    }
    for (commdet::NodeId v = 0; v < graph.node_count(); ++v) {
        std::string score = "nan";
        if (ind == commdet::CentralityIndicator::lci) {
            auto s = commdet::lci(graph, v);
            if (s) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.6f", *s);
                score = buf;
            } else {
                score = "isolated";
            }
        } else {
            score = std::to_string(graph.degree(v));
        }
        std::cout << graph.label(v) << "\t" << score << "\t" << (central.count(v) ? 1 : 0) << "\n";
    }
    return 0;
}

// Label -> community maps compared directly; both files must cover the
// same label set.
int cmd_eval(const std::string& detected_path, const std::string& reference_path) {
    auto parse = [](const std::string& path) {
        std::map<std::string, int> out;
        std::stringstream in(read_file(path));
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::string label;
            int community;
            if (!(ls >> label)) continue;
            if (label[0] == '#') continue;
            if (!(ls >> community))
                throw commdet::ParseError(path + " line " + std::to_string(line_no) +
                                          ": expected `label community`");
            if (!out.emplace(label, community).second)
                throw commdet::ParseError(path + " line " + std::to_string(line_no) +
                                          ": duplicate node '" + label + "'");
        }
        return out;
    };
    auto detected = parse(detected_path);
    auto reference = parse(reference_path);

    std::vector<std::string> only_detected, only_reference;
    for (const auto& [label, c] : detected)
        if (!reference.count(label)) only_detected.push_back(label);
    for (const auto& [label, c] : reference)
        if (!detected.count(label)) only_reference.push_back(label);
    if (!only_detected.empty() || !only_reference.empty()) {
        std::string msg = "node sets differ;";
        for (const auto& l : only_detected) msg += " +" + l;
        for (const auto& l : only_reference) msg += " -" + l;
        throw commdet::DataError(msg);
    }

    std::vector<commdet::CommunityId> ref_assign, found_assign;
    for (const auto& [label, c] : reference) {
        ref_assign.push_back(c);
        found_assign.push_back(detected.at(label));
    }
    commdet::Partition ref(ref_assign), found(found_assign);
    commdet::ConfusionMatrix cm = commdet::confusion_matrix(ref, found);
    json counts = json::array();
    for (const auto& row : cm.counts) counts.push_back(row);
    json out{{"nmi", commdet::nmi(ref, found)},
             {"c_r", ref.community_count()},
             {"c_f", found.community_count()},
             {"confusion", counts}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

void emit_network(const commdet::Graph& graph, const commdet::Partition* truth,
                  const std::string& out_path, const std::string& truth_path) {
    std::string text = commdet::write_edgelist(graph);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    if (!truth_path.empty()) {
        if (!truth) throw commdet::DataError("this generator has no ground-truth partition");
        write_file(truth_path, commdet::write_partition(*truth, graph));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection toolkit: local-centrality seeded greedy expansion"};
    app.require_subcommand(1);

    // detect
    DetectArgs det;
    auto* detect_cmd = app.add_subcommand("detect", "Detect communities");
    detect_cmd->add_option("--input", det.input, "Graph file")->required();
    detect_cmd->add_option("--format", det.format, "edgelist|gml");
    detect_cmd->add_option("--modularity", det.modularity, "Objective: q|r|m|f|f2");
    detect_cmd->add_option("--restarts", det.restarts, "Number of restarts");
    detect_cmd->add_option("--seed", det.seed, "RNG seed");
    detect_cmd->add_option("--threshold", det.threshold, "LCI threshold for central nodes");
    detect_cmd->add_option("--tie-break", det.tie_break, "random|deterministic");
    detect_cmd->add_flag("--accept-zero-gain", det.accept_zero_gain, "Accept zero-gain expansions");
    detect_cmd->add_option("--output", det.output, "Partition TSV output (default stdout)");
    detect_cmd->add_option("--report", det.report, "Detection report JSON output");

    // score
    std::string sc_input, sc_format = "edgelist", sc_partition, sc_modularity = "f2";
    double sc_alpha = 1.0;
    auto* score_cmd = app.add_subcommand("score", "Score a partition under a modularity function");
    score_cmd->add_option("--input", sc_input, "Graph file")->required();
    score_cmd->add_option("--format", sc_format, "edgelist|gml");
    score_cmd->add_option("--partition", sc_partition, "Partition TSV")->required();
    score_cmd->add_option("--modularity", sc_modularity, "q|r|m|f|f2");
    score_cmd->add_option("--alpha", sc_alpha, "Exponent for F");

    // centrality
    std::string ce_input, ce_format = "edgelist", ce_indicator = "lci";
    int ce_k = 1;
    double ce_threshold = 0.0;
    auto* centrality_cmd = app.add_subcommand("centrality", "Per-node centrality report");
    centrality_cmd->add_option("--input", ce_input, "Graph file")->required();
    centrality_cmd->add_option("--format", ce_format, "edgelist|gml");
    centrality_cmd->add_option("--indicator", ce_indicator, "lci|gmd|lmd");
    centrality_cmd->add_option("--k", ce_k, "Top-k for gmd");
    centrality_cmd->add_option("--threshold", ce_threshold, "LCI threshold");

    // eval
    std::string ev_detected, ev_reference;
    auto* eval_cmd = app.add_subcommand("eval", "Compare two partitions (NMI + confusion matrix)");
    eval_cmd->add_option("--detected", ev_detected, "Detected partition TSV")->required();
    eval_cmd->add_option("--reference", ev_reference, "Reference partition TSV")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic networks");
    gen_cmd->require_subcommand(1);
    std::string g_out, g_truth;
    int g_l = 10, g_p = 3, g_q = 3, g_a = 6, g_b = 4, g_n = 100;
    double g_pe = 0.1;
    std::uint64_t g_seed = 42;
    commdet::LfrParams lfr;

    auto add_out = [&](CLI::App* cmd, bool truth) {
        cmd->add_option("--out", g_out, "Edge-list output (default stdout)");
        if (truth) cmd->add_option("--truth", g_truth, "Ground-truth partition TSV output");
    };
    auto* ring = gen_cmd->add_subcommand("ring-cliques", "Ring of p-cliques");
    ring->add_option("--l", g_l, "Clique count");
    ring->add_option("--p", g_p, "Clique size");
    add_out(ring, true);
    auto* pq = gen_cmd->add_subcommand("pq", "Two p-cliques and two q-cliques");
    pq->add_option("--p", g_p, "Large clique size");
    pq->add_option("--q", g_q, "Small clique size");
    add_out(pq, true);
    auto* bridge = gen_cmd->add_subcommand("bridge", "Two complete graphs joined by one edge");
    bridge->add_option("--a", g_a, "First clique size");
    bridge->add_option("--b", g_b, "Second clique size");
    add_out(bridge, false);
    auto* well = gen_cmd->add_subcommand("well-connected", "Two 4-cliques with 10 cross edges");
    add_out(well, false);
    auto* er = gen_cmd->add_subcommand("er", "Erdos-Renyi G(n, p)");
    er->add_option("--n", g_n, "Node count");
    er->add_option("--p", g_pe, "Edge probability");
    er->add_option("--seed", g_seed, "RNG seed");
    add_out(er, false);
    auto* complete = gen_cmd->add_subcommand("complete", "Complete graph");
    complete->add_option("--n", g_n, "Node count");
    add_out(complete, false);
    auto* lfr_cmd = gen_cmd->add_subcommand("lfr", "LFR benchmark graph");
    lfr_cmd->add_option("--n", lfr.n, "Node count");
    lfr_cmd->add_option("--avg-k", lfr.avg_k, "Target mean degree");
    lfr_cmd->add_option("--max-k", lfr.max_k, "Degree cap");
    lfr_cmd->add_option("--gamma", lfr.gamma, "Degree exponent, in (2,3)");
    lfr_cmd->add_option("--beta", lfr.beta, "Community-size exponent, in (1,2)");
    lfr_cmd->add_option("--mu", lfr.mu, "Mixing fraction, in [0,1)");
    lfr_cmd->add_option("--s-min", lfr.s_min, "Minimum community size");
    lfr_cmd->add_option("--s-max", lfr.s_max, "Maximum community size");
    lfr_cmd->add_option("--seed", g_seed, "RNG seed");
    add_out(lfr_cmd, true);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark harnesses");
    bench_cmd->require_subcommand(1);
    std::string sw_config, sw_out, sw_summary, t1_data = "data";
    std::uint64_t t1_seed = 42;
    int t1_restarts = 10;
    auto* sweep_cmd = bench_cmd->add_subcommand("sweep", "LFR mu/n sweep");
    sweep_cmd->add_option("--config", sw_config, "Sweep spec (key=value lines)")->required();
    sweep_cmd->add_option("--out", sw_out, "CSV output (default stdout)");
    sweep_cmd->add_option("--summary", sw_summary, "Per-point summary JSON output");
    auto* table1_cmd = bench_cmd->add_subcommand("table1", "Real-network summary table");
    table1_cmd->add_option("--data", t1_data, "Directory with bundled datasets");
    table1_cmd->add_option("--seed", t1_seed, "Detection seed");
    table1_cmd->add_option("--restarts", t1_restarts, "Detection restarts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect_cmd) return cmd_detect(det);
        if (*score_cmd) return cmd_score(sc_input, sc_format, sc_partition, sc_modularity, sc_alpha);
        if (*centrality_cmd) return cmd_centrality(ce_input, ce_format, ce_indicator, ce_k, ce_threshold);
        if (*eval_cmd) return cmd_eval(ev_detected, ev_reference);
        if (*gen_cmd) {
            if (*ring) {
                auto net = commdet::gen_ring_cliques(g_l, g_p);
                emit_network(net.graph, &net.ground_truth, g_out, g_truth);
            } else if (*pq) {
                auto net = commdet::gen_pq_network(g_p, g_q);
                emit_network(net.graph, &net.ground_truth, g_out, g_truth);
            } else if (*bridge) {
                auto graph = commdet::gen_two_cliques_bridge(g_a, g_b);
                emit_network(graph, nullptr, g_out, g_truth);
            } else if (*well) {
                auto graph = commdet::gen_well_connected();
                emit_network(graph, nullptr, g_out, g_truth);
            } else if (*er) {
                auto graph = commdet::gen_er(g_n, g_pe, g_seed);
                emit_network(graph, nullptr, g_out, g_truth);
            } else if (*complete) {
                auto graph = commdet::gen_complete(g_n);
                emit_network(graph, nullptr, g_out, g_truth);
            } else if (*lfr_cmd) {
                auto net = commdet::gen_lfr(lfr, g_seed);
                emit_network(net.graph, &net.ground_truth, g_out, g_truth);
            }
            return 0;
        }
        if (*bench_cmd) {
            if (*sweep_cmd) {
                commdet::SweepSpec spec = commdet::parse_sweep_spec(read_file(sw_config));
                commdet::SweepResult result = commdet::run_sweep(spec);
                std::string csv = commdet::sweep_csv(result);
                if (sw_out.empty()) {
                    std::cout << csv;
                } else {
                    write_file(sw_out, csv);
                }
                if (!sw_summary.empty()) write_file(sw_summary, commdet::sweep_summary_json(result));
            } else if (*table1_cmd) {
                auto rows = commdet::run_table1(t1_data, t1_seed, t1_restarts);
                std::cout << commdet::table1_json(rows);
                for (const auto& row : rows)
                    if (!row.pass) return 2;
            }
            return 0;
        }
    } catch (const commdet::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const commdet::DataError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 1;
}
