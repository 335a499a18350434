#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "commdet/graph.hpp"
#include "commdet/modularity.hpp"
#include "commdet/synth.hpp"

using namespace commdet;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> all;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u) all.push_back(std::to_string(u));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({all[u], all[v]});
    return Graph::from_edges(edges, all);
}

Partition random_partition(std::mt19937_64& rng, int n, int max_m) {
    std::uniform_int_distribution<int> pick(0, max_m - 1);
    std::vector<CommunityId> a(n);
    for (int v = 0; v < n; ++v) a[v] = pick(rng);
    return Partition(std::move(a));
}

Partition merge_ring_pairs(const Partition& single) {
    std::vector<CommunityId> a;
    for (CommunityId c : single.assignment()) a.push_back(c / 2);
    return Partition(std::move(a));
}

double sum(const std::vector<double>& xs) {
    double s = 0;
    for (double x : xs) s += x;
    return s;
}

}  // namespace

TEST_CASE("parse/name round trip") {
    for (auto fn : {ModularityFunction::q, ModularityFunction::r, ModularityFunction::m,
                    ModularityFunction::f, ModularityFunction::f2})
        CHECK(parse_modularity(modularity_name(fn)) == fn);
    CHECK_THROWS_AS(parse_modularity("d"), DataError);
}

TEST_CASE("Q: whole connected graph scores zero") {
    Graph g = gen_complete(5);
    Partition whole(std::vector<CommunityId>(5, 0));
    CHECK(q_score(g, whole).value == doctest::Approx(0.0));
}

TEST_CASE("Q: edgeless graph rejected") {
    Graph g = Graph::from_edges({}, {"a", "b"});
    Partition p({0, 1});
    CHECK_THROWS_AS(q_score(g, p), DataError);
}

TEST_CASE("Q on the ten 3-clique ring: resolution limit numbers") {
    auto [g, truth] = gen_ring_cliques(10, 3);
    CHECK(q_score(g, truth).value == doctest::Approx(0.65).epsilon(1e-12));
    Partition merged = merge_ring_pairs(truth);
    CHECK(q_score(g, merged).value == doctest::Approx(0.675).epsilon(1e-12));
}

TEST_CASE("R on the ten 3-clique ring: per the boundary definition") {
    auto [g, truth] = gen_ring_cliques(10, 3);
    // Each clique: two bridge-endpoint boundary nodes; edges touching them
    // inside the clique number 3 (counted once each), B_out = 2.
    ModularityScore r = r_score(g, truth);
    CHECK(r.per_community.size() == 10);
    for (double term : r.per_community) CHECK(term == doctest::Approx(3.0 / 5.0).epsilon(1e-12));
}

TEST_CASE("R conventions: no-boundary community contributes 1") {
    Graph g = gen_complete(4);
    Partition whole(std::vector<CommunityId>(4, 0));
    CHECK(r_score(g, whole).value == doctest::Approx(1.0));
}

TEST_CASE("M on the ring: counts and merging preference") {
    auto [g, truth] = gen_ring_cliques(10, 3);
    CHECK(m_score(g, truth).value == doctest::Approx(15.0).epsilon(1e-12));
    Partition merged = merge_ring_pairs(truth);
    CHECK(m_score(g, merged).value == doctest::Approx(17.5).epsilon(1e-12));
}

TEST_CASE("M: whole graph is infinite") {
    Graph g = gen_complete(4);
    Partition whole(std::vector<CommunityId>(4, 0));
    CHECK(std::isinf(m_score(g, whole).value));
}

TEST_CASE("F: whole graph, Figure 2(c) split, and the sqrt identity") {
    Graph g = gen_complete(5);
    Partition whole(std::vector<CommunityId>(5, 0));
    CHECK(f_score(g, whole, 1.0).value == doctest::Approx(1.0));

    Graph wc = gen_well_connected();
    std::vector<CommunityId> half(8, 0);
    for (int v = 4; v < 8; ++v) half[v] = 1;
    Partition split(half);
    CHECK(f_score(wc, split, 1.0).value == doctest::Approx(2.0 * 12.0 / 22.0).epsilon(1e-12));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Graph rg = random_graph(rng, 12, 0.3);
        Partition p = random_partition(rng, rg.node_count(), 4);
        ModularityScore f = f_score(rg, p, 1.0);
        ModularityScore f2 = f2_score(rg, p);
        REQUIRE(f.per_community.size() == f2.per_community.size());
        for (std::size_t i = 0; i < f.per_community.size(); ++i)
            CHECK(f.per_community[i] == doctest::Approx(std::sqrt(f2.per_community[i])).epsilon(1e-12));
    }
}

TEST_CASE("f2_community spot values") {
    CHECK(f2_community(6, 2) == doctest::Approx(0.5625).epsilon(1e-12));
    CHECK(f2_community(4, 0) == doctest::Approx(1.0));
    CHECK(f2_community(12, 10) == doctest::Approx((12.0 / 22.0) * (12.0 / 22.0)).epsilon(1e-12));
    CHECK(f2_community(0, 0) == doctest::Approx(0.0));  // isolated singleton convention
}

TEST_CASE("F2 on the ring matches the closed forms") {
    auto [g, truth] = gen_ring_cliques(10, 3);
    CHECK(f2_score(g, truth).value == doctest::Approx(5.625).epsilon(1e-12));
    Partition merged = merge_ring_pairs(truth);
    CHECK(f2_score(g, merged).value == doctest::Approx(3.828125).epsilon(1e-12));
}

TEST_CASE("per-community terms sum to the value") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 15, 0.3);
        if (g.edge_count() == 0) continue;
        Partition p = random_partition(rng, g.node_count(), 5);
        for (auto fn : {ModularityFunction::q, ModularityFunction::r, ModularityFunction::f,
                        ModularityFunction::f2}) {
            ModularityScore s = score_partition(g, p, fn);
            CHECK(s.value == doctest::Approx(sum(s.per_community)).epsilon(1e-12));
        }
    }
}

TEST_CASE("community state: counters match a recount for any addition sequence") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 20), 0.35);
        std::vector<NodeId> order(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        int take = 1 + static_cast<int>(rng() % g.node_count());

        CommunityState state = CommunityState::seed(g, order[0]);
        for (int i = 1; i < take; ++i) state.add(g, order[i]);

        long long d_in = 0, d_out = 0, degree_sum = 0;
        for (int i = 0; i < take; ++i) {
            NodeId u = order[i];
            degree_sum += g.degree(u);
            for (NodeId v : g.neighbors(u)) {
                bool inside = false;
                for (int j = 0; j < take; ++j) inside |= (order[j] == v);
                if (inside)
                    ++d_in;
                else
                    ++d_out;
            }
        }
        CHECK(state.d_in() == d_in);
        CHECK(state.d_out() == d_out);
        CHECK(state.d_in() % 2 == 0);
        CHECK(state.d_in() + state.d_out() == degree_sum);
        CHECK(state.size() == take);
    }
}

TEST_CASE("f2_delta: hand example and candidate classification") {
    Graph k5 = gen_complete(5);
    CommunityState state = CommunityState::seed(k5, 0);
    CHECK(f2_delta(state, 1, k5) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(state.size() == 1);  // delta must not mutate

    // A candidate with no edges into the community always loses.
    Graph g = load_graph("1 2\n3 4\n", GraphFormat::edgelist);
    CommunityState s2 = CommunityState::seed(g, 0);
    s2.add(g, 1);
    CHECK(f2_delta(s2, 2, g) < 0.0);

    // Completing an isolated clique lands exactly on F2 = 1.
    Graph k4 = gen_complete(4);
    CommunityState s3 = CommunityState::seed(k4, 0);
    s3.add(k4, 1);
    s3.add(k4, 2);
    double before = f2_community(s3.d_in(), s3.d_out());
    CHECK(f2_delta(s3, 3, k4) == doctest::Approx(1.0 - before).epsilon(1e-12));
}

TEST_CASE("property: cumulative f2_delta equals from-scratch recomputation") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 25), 0.3);
        std::vector<NodeId> order(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);

        CommunityState state = CommunityState::seed(g, order[0]);
        double running = f2_community(state.d_in(), state.d_out());
        for (std::size_t i = 1; i < order.size(); ++i) {
            running += f2_delta(state, order[i], g);
            state.add(g, order[i]);
            CHECK(running == doctest::Approx(f2_community(state.d_in(), state.d_out())).epsilon(1e-12));
        }
    }
}

TEST_CASE("property: F2 bounded by community count, Q bounded by 1") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 12, 0.3);
        if (g.edge_count() == 0) continue;
        Partition p = random_partition(rng, g.node_count(), 4);
        ModularityScore f2 = f2_score(g, p);
        CHECK(f2.value >= 0.0);
        CHECK(f2.value <= p.community_count());
        for (double term : f2.per_community) {
            CHECK(term >= 0.0);
            CHECK(term <= 1.0);
        }
        CHECK(q_score(g, p).value <= 1.0);
    }
}

TEST_CASE("argmax property: single cliques beat every merge on clique rings") {
    for (int l : {6, 8, 10, 12})
        for (int p = 3; p <= 6; ++p) {
            auto [g, truth] = gen_ring_cliques(l, p);
            double single = f2_score(g, truth).value;
            for (int h = 2; h <= l / 2; ++h) {
                if (l % h != 0) continue;
                std::vector<CommunityId> a;
                for (CommunityId c : truth.assignment()) a.push_back(c / h);
                CHECK(single > f2_score(g, Partition(std::move(a))).value);
            }
        }
}
