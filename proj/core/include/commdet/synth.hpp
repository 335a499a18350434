#pragma once

#include <cstdint>

#include "commdet/graph.hpp"

namespace commdet {

struct GeneratedNetwork {
    Graph graph;
    Partition ground_truth;
};

/// l p-cliques on a ring, consecutive cliques joined by one bridge edge.
/// Ground truth: one community per clique.
GeneratedNetwork gen_ring_cliques(int l, int p);

/// Cliques A(p), B(p), C(q), D(q) with bridge edges A-B, B-C, B-D, C-D,
/// giving external degrees 1, 3, 2, 2. Ground truth: four communities.
GeneratedNetwork gen_pq_network(int p, int q);

/// K_a and K_b joined by a single edge; the bridge endpoints carry
/// labels "1" and "2".
Graph gen_two_cliques_bridge(int a, int b);

/// Two 4-cliques with 10 of the 16 possible cross edges; both halves end up
/// with d_in = 12 and d_out = 10.
Graph gen_well_connected();

Graph gen_er(int n, double p_edge, std::uint64_t seed);

Graph gen_complete(int n);

struct LfrParams {
    int n = 500;
    double avg_k = 20.0;
    int max_k = 50;
    double gamma = 2.5;  // degree exponent, in (2, 3)
    double beta = 1.5;   // community-size exponent, in (1, 2)
    double mu = 0.1;     // mixing fraction, in [0, 1)
    int s_min = 20;
    int s_max = 100;
};

/// Planted-partition benchmark: power-law degrees and community sizes,
/// per-node external-degree fraction mu.
GeneratedNetwork gen_lfr(const LfrParams& params, std::uint64_t seed);

/// Expected F2 of an ER/complete graph split into parts of n1 and n2 nodes.
double f2_closed_random_split(long long n1, long long n2);

/// F2 of a ring of l p-cliques partitioned into runs of h consecutive
/// cliques (h = 1: one community per clique). h must divide l.
double f2_closed_ring(long long l, long long p, long long h);

/// F2 of the p/q four-clique network with the two q-cliques kept separate
/// (merged = false) or fused into one community (merged = true).
double f2_closed_pq(long long p, long long q, bool merged);

}  // namespace commdet
