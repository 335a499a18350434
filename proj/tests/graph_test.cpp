#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "commdet/graph.hpp"

using namespace commdet;

namespace {

Graph triangle() { return load_graph("1 2\n2 3\n3 1\n", GraphFormat::edgelist); }

std::set<std::pair<std::string, std::string>> edge_set(const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u)) {
            std::string a = g.label(u), b = g.label(v);
            if (a > b) std::swap(a, b);
            out.insert({a, b});
        }
    return out;
}

}  // namespace

TEST_CASE("edgelist triangle: smallest cycle") {
    Graph g = triangle();
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    for (NodeId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 0));
}

TEST_CASE("edgelist degenerate input: duplicates and self-loops counted") {
    GraphWarnings w;
    Graph g = load_graph("1 2\n1 2\n1 1\n", GraphFormat::edgelist, &w);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(w.duplicate_edges_dropped == 1);
    CHECK(w.self_loops_dropped == 1);
}

TEST_CASE("edgelist reversed duplicate collapses too") {
    GraphWarnings w;
    Graph g = load_graph("a b\nb a\n", GraphFormat::edgelist, &w);
    CHECK(g.edge_count() == 1);
    CHECK(w.duplicate_edges_dropped == 1);
}

TEST_CASE("edgelist comments and blank lines ignored") {
    Graph g = load_graph("# header\n1 2\n\n# mid\n2 3\n", GraphFormat::edgelist);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("edgelist malformed line reports line number") {
    CHECK_THROWS_WITH_AS(load_graph("1 2\n3\n", GraphFormat::edgelist), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(load_graph("1 2 3\n", GraphFormat::edgelist), doctest::Contains("line 1"),
                         ParseError);
}

TEST_CASE("empty input rejected") {
    CHECK_THROWS_AS(load_graph("", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(load_graph("# only comments\n", GraphFormat::edgelist), ParseError);
    CHECK_THROWS_AS(load_graph("", GraphFormat::gml), ParseError);
}

TEST_CASE("labels map to dense ids in first-appearance order") {
    Graph g = load_graph("carol alice\nalice bob\n", GraphFormat::edgelist);
    CHECK(g.label(0) == "carol");
    CHECK(g.label(1) == "alice");
    CHECK(g.label(2) == "bob");
    CHECK(g.find_node("bob") == NodeId{2});
    CHECK(!g.find_node("dave").has_value());
}

TEST_CASE("gml subset parses nodes and edges") {
    const char* text =
        "# sample\n"
        "graph [\n"
        "  directed 0\n"
        "  node [ id 7 label \"a\" ]\n"
        "  node [ id 9 ]\n"
        "  node [ id 11 ]\n"
        "  edge [ source 7 target 9 weight 2 ]\n"
        "  edge [ source 9 target 11 ]\n"
        "]\n";
    Graph g = load_graph(text, GraphFormat::gml);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    // Node labels are the GML ids; `label` is among the ignored keys.
    CHECK(g.label(0) == "7");
    CHECK(g.label(1) == "9");
    CHECK(g.degree(1) == 2);
}

TEST_CASE("gml dangling endpoint rejected") {
    const char* text = "graph [ node [ id 1 ] edge [ source 1 target 2 ] ]";
    CHECK_THROWS_WITH_AS(load_graph(text, GraphFormat::gml), doctest::Contains("2"), ParseError);
}

TEST_CASE("gml declared isolated node is kept") {
    const char* text = "graph [ node [ id 1 ] node [ id 2 ] node [ id 3 ] edge [ source 1 target 2 ] ]";
    Graph g = load_graph(text, GraphFormat::gml);
    CHECK(g.node_count() == 3);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("bundled karate matches the published counts") {
    const char* dir = std::getenv("COMMDET_DATA_DIR");
    REQUIRE(dir != nullptr);
    Graph g = load_graph_file(std::string(dir) + "/karate.gml", GraphFormat::gml);
    CHECK(g.node_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(g.mean_degree() == doctest::Approx(4.5882).epsilon(1e-4));
}

TEST_CASE("parse_graph_format") {
    CHECK(parse_graph_format("edgelist") == GraphFormat::edgelist);
    CHECK(parse_graph_format("gml") == GraphFormat::gml);
    CHECK_THROWS_AS(parse_graph_format("dot"), DataError);
}

TEST_CASE("degree-sum identity and symmetry on random graphs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 40);
        std::string text;
        std::bernoulli_distribution coin(0.2);
        int lines = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) {
                    text += std::to_string(u) + " " + std::to_string(v) + "\n";
                    ++lines;
                }
        if (lines == 0) continue;
        Graph g = load_graph(text, GraphFormat::edgelist);
        long long degree_sum = 0;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            degree_sum += g.degree(u);
            for (NodeId v : g.neighbors(u)) CHECK(g.has_edge(v, u));
        }
        CHECK(degree_sum == 2 * static_cast<long long>(g.edge_count()));
    }
}

TEST_CASE("line permutation preserves degree multiset") {
    std::vector<std::string> lines = {"1 2", "2 3", "3 4", "4 1", "2 4", "5 1"};
    auto degrees_of = [](const std::vector<std::string>& ls) {
        std::string text;
        for (const auto& l : ls) text += l + "\n";
        Graph g = load_graph(text, GraphFormat::edgelist);
        std::vector<int> d;
        for (NodeId v = 0; v < g.node_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    auto base = degrees_of(lines);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(lines.begin(), lines.end(), rng);
        CHECK(degrees_of(lines) == base);
    }
}

TEST_CASE("edgelist round-trip reproduces the edge set") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 20);
        std::string text;
        std::bernoulli_distribution coin(0.3);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) text += std::to_string(u) + " " + std::to_string(v) + "\n";
        if (text.empty()) continue;
        Graph g = load_graph(text, GraphFormat::edgelist);
        Graph h = load_graph(write_edgelist(g), GraphFormat::edgelist);
        CHECK(edge_set(g) == edge_set(h));
    }
}

TEST_CASE("write_edgelist lists isolated nodes as comments") {
    Graph g = Graph::from_edges({{"a", "b"}}, {"z"});
    std::string text = write_edgelist(g);
    CHECK(text.find("# isolated z") != std::string::npos);
}

TEST_CASE("partition densifies community ids") {
    Partition p({5, 5, 9, 5});
    CHECK(p.community_count() == 2);
    CHECK(p.community_of(0) == 0);
    CHECK(p.community_of(2) == 1);
    auto comms = p.communities();
    REQUIRE(comms.size() == 2);
    CHECK(comms[0] == std::vector<NodeId>{0, 1, 3});
    CHECK(comms[1] == std::vector<NodeId>{2});
}

TEST_CASE("same_clustering is relabel-invariant") {
    Partition a({0, 0, 1, 1});
    Partition b({1, 1, 0, 0});
    Partition c({0, 1, 1, 0});
    CHECK(a.same_clustering(b));
    CHECK(!a.same_clustering(c));
}

TEST_CASE("write_partition format and label sort") {
    Graph g = load_graph("10 2\n2 1\n", GraphFormat::edgelist);
    // ids: 10->0, 2->1, 1->2
    Partition p({0, 0, 1});
    CHECK(write_partition(p, g) == "1\t1\n2\t0\n10\t0\n");  // numeric-aware ordering
}

TEST_CASE("partition round-trip up to relabeling") {
    Graph g = load_graph("1 2\n2 3\n3 4\n4 5\n", GraphFormat::edgelist);
    Partition p({0, 0, 1, 1, 2});
    Partition q = load_partition(write_partition(p, g), g);
    CHECK(p.same_clustering(q));
}

TEST_CASE("load_partition error cases") {
    Graph g = load_graph("1 2\n", GraphFormat::edgelist);
    CHECK_THROWS_WITH_AS(load_partition("1\t0\n", g), doctest::Contains("2"), DataError);       // missing
    CHECK_THROWS_WITH_AS(load_partition("1\t0\n2\t0\n9\t1\n", g), doctest::Contains("9"),
                         ParseError);                                                           // unknown
    CHECK_THROWS_WITH_AS(load_partition("1\t0\n2\t0\n1\t1\n", g), doctest::Contains("1"),
                         ParseError);                                                           // duplicate
}

TEST_CASE("partial partition bookkeeping") {
    PartialPartition pp(4);
    CHECK(pp.unassigned_nodes().size() == 4);
    CommunityId c = pp.new_community();
    pp.assign(1, c);
    CHECK(pp.is_assigned(1));
    CHECK(!pp.is_assigned(0));
    CHECK(pp.community_count() == 1);
    CHECK(pp.unassigned_nodes() == std::vector<NodeId>{0, 2, 3});
}
