#include "commdet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace commdet {

namespace {

std::string lab(int id) { return std::to_string(id + 1); }  // 1-based labels

void add_clique(std::vector<std::pair<std::string, std::string>>& edges, int first, int size) {
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) edges.emplace_back(lab(first + i), lab(first + j));
}

}  // namespace

GeneratedNetwork gen_ring_cliques(int l, int p) {
    if (l < 3 || p < 3) throw DataError("gen_ring_cliques requires l >= 3 and p >= 3");
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<CommunityId> truth(static_cast<std::size_t>(l) * p);
    for (int c = 0; c < l; ++c) {
        add_clique(edges, c * p, p);
        for (int j = 0; j < p; ++j) truth[c * p + j] = c;
        // first node of each clique bridges to the second node of the next
        int next = (c + 1) % l;
        edges.emplace_back(lab(c * p), lab(next * p + 1));
    }
    GraphWarnings w;
    Graph g = Graph::from_edges(edges, {}, &w);
    return {std::move(g), Partition(std::move(truth))};
}

GeneratedNetwork gen_pq_network(int p, int q) {
    if (!(p > q && q >= 3)) throw DataError("gen_pq_network requires p > q >= 3");
    std::vector<std::pair<std::string, std::string>> edges;
    int a0 = 0, b0 = p, c0 = 2 * p, d0 = 2 * p + q;
    add_clique(edges, a0, p);
    add_clique(edges, b0, p);
    add_clique(edges, c0, q);
    add_clique(edges, d0, q);
    edges.emplace_back(lab(a0), lab(b0));          // A-B
    edges.emplace_back(lab(b0 + 1), lab(c0));      // B-C
    edges.emplace_back(lab(b0 + 2), lab(d0));      // B-D
    edges.emplace_back(lab(c0 + 1), lab(d0 + 1));  // C-D
    std::vector<CommunityId> truth(2 * p + 2 * q);
    for (int i = 0; i < p; ++i) truth[a0 + i] = 0;
    for (int i = 0; i < p; ++i) truth[b0 + i] = 1;
    for (int i = 0; i < q; ++i) truth[c0 + i] = 2;
    for (int i = 0; i < q; ++i) truth[d0 + i] = 3;
    Graph g = Graph::from_edges(edges, {}, nullptr);
    return {std::move(g), Partition(std::move(truth))};
}

Graph gen_two_cliques_bridge(int a, int b) {
    if (!(a >= b && b >= 3)) throw DataError("gen_two_cliques_bridge requires a >= b >= 3");
    // node 0 -> label "1" (K_a bridge), node 1 -> label "2" (K_b bridge),
    // nodes 2..a are the rest of K_a, the remainder K_b
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<int> ka{0}, kb{1};
    for (int i = 2; i <= a; ++i) ka.push_back(i);
    for (int i = a + 1; i < a + b; ++i) kb.push_back(i);
    for (std::size_t i = 0; i < ka.size(); ++i)
        for (std::size_t j = i + 1; j < ka.size(); ++j) edges.emplace_back(lab(ka[i]), lab(ka[j]));
    for (std::size_t i = 0; i < kb.size(); ++i)
        for (std::size_t j = i + 1; j < kb.size(); ++j) edges.emplace_back(lab(kb[i]), lab(kb[j]));
    edges.emplace_back(lab(0), lab(1));
    return Graph::from_edges(edges, {}, nullptr);
}

Graph gen_well_connected() {
    std::vector<std::pair<std::string, std::string>> edges;
    add_clique(edges, 0, 4);
    add_clique(edges, 4, 4);
    std::set<std::pair<int, int>> excluded{{0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 5}, {1, 6}};
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < 8; ++j)
            if (!excluded.count({i, j})) edges.emplace_back(lab(i), lab(j));
    return Graph::from_edges(edges, {}, nullptr);
}

Graph gen_er(int n, double p_edge, std::uint64_t seed) {
    if (n < 1 || p_edge < 0.0 || p_edge > 1.0) throw DataError("gen_er: bad parameters");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p_edge);
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(lab(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(lab(i), lab(j));
    return Graph::from_edges(edges, nodes, nullptr);
}

Graph gen_complete(int n) {
    if (n < 1) throw DataError("gen_complete: n must be >= 1");
    std::vector<std::pair<std::string, std::string>> edges;
    add_clique(edges, 0, n);
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(lab(i));
    return Graph::from_edges(edges, nodes, nullptr);
}

namespace {

// Mean of the continuous power law x^-gamma truncated to [lo, hi].
double truncated_powerlaw_mean(double gamma, double lo, double hi) {
    double a1 = 1.0 - gamma, a2 = 2.0 - gamma;
    double norm = (std::pow(hi, a1) - std::pow(lo, a1)) / a1;
    double first = (std::pow(hi, a2) - std::pow(lo, a2)) / a2;
    return first / norm;
}

double sample_powerlaw(std::mt19937_64& rng, double gamma, double lo, double hi) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double a1 = 1.0 - gamma;
    double u = unit(rng);
    return std::pow(std::pow(lo, a1) + u * (std::pow(hi, a1) - std::pow(lo, a1)), 1.0 / a1);
}

struct EdgeSet {
    std::set<std::pair<int, int>> edges;
    bool insert(int u, int v) {
        if (u == v) return false;
        return edges.insert(std::minmax(u, v)).second;
    }
    bool contains(int u, int v) const { return edges.count(std::minmax(u, v)) != 0; }
    void erase(int u, int v) { edges.erase(std::minmax(u, v)); }
};

}  // namespace

GeneratedNetwork gen_lfr(const LfrParams& params, std::uint64_t seed) {
    if (params.n < 10) throw DataError("gen_lfr: n too small");
    if (!(params.gamma > 2.0 && params.gamma < 3.0)) throw DataError("gen_lfr: gamma must be in (2,3)");
    if (!(params.beta > 1.0 && params.beta < 2.0)) throw DataError("gen_lfr: beta must be in (1,2)");
    if (!(params.mu >= 0.0 && params.mu < 1.0)) throw DataError("gen_lfr: mu must be in [0,1)");
    if (params.s_min < 2 || params.s_max < params.s_min || params.s_max > params.n)
        throw DataError("gen_lfr: bad community-size bounds");
    if (params.max_k >= params.s_max)
        throw DataError("gen_lfr: requires s_max > k_max");
    if (params.max_k >= params.n) throw DataError("gen_lfr: max_k must be < n");

    std::mt19937_64 rng(seed);

    // 1. Degree sequence: truncated power law, lower cutoff solved so the
    //    mean lands on avg_k, then nudged to within 2%.
    double lo = 1.0, hi = static_cast<double>(params.max_k);
    {
        double a = 1.0, b = hi - 1.0;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b);
            if (truncated_powerlaw_mean(params.gamma, mid, hi) < params.avg_k)
                a = mid;
            else
                b = mid;
        }
        lo = 0.5 * (a + b);
    }
    if (truncated_powerlaw_mean(params.gamma, lo, hi) < params.avg_k * 0.9)
        throw DataError("gen_lfr: avg_k unreachable under max_k cap");

    std::vector<int> degree(params.n);
    for (int i = 0; i < params.n; ++i) {
        int k = static_cast<int>(std::llround(sample_powerlaw(rng, params.gamma, lo, hi)));
        degree[i] = std::clamp(k, 1, params.max_k);
    }
    auto mean_degree = [&] {
        return std::accumulate(degree.begin(), degree.end(), 0.0) / params.n;
    };
    std::uniform_int_distribution<int> pick_node(0, params.n - 1);
    for (int guard = 0; guard < 100000 && std::abs(mean_degree() - params.avg_k) > 0.01 * params.avg_k;
         ++guard) {
        int v = pick_node(rng);
        if (mean_degree() < params.avg_k) {
            if (degree[v] < params.max_k) ++degree[v];
        } else {
            if (degree[v] > 1) --degree[v];
        }
    }
    if (std::abs(mean_degree() - params.avg_k) > 0.02 * params.avg_k)
        throw DataError("gen_lfr: failed to hit avg_k within 2%");

    int derived_k_min = *std::min_element(degree.begin(), degree.end());
    if (params.s_min <= derived_k_min)
        throw DataError("gen_lfr: requires s_min > k_min (k_min = " +
                        std::to_string(derived_k_min) + ")");

    // Internal/external split per node.
    std::vector<int> internal_deg(params.n), external_deg(params.n);
    for (int i = 0; i < params.n; ++i) {
        internal_deg[i] = static_cast<int>(std::llround((1.0 - params.mu) * degree[i]));
        internal_deg[i] = std::clamp(internal_deg[i], 0, degree[i]);
        external_deg[i] = degree[i] - internal_deg[i];
        if (internal_deg[i] >= params.s_max)
            throw DataError("gen_lfr: node internal degree " + std::to_string(internal_deg[i]) +
                            " cannot fit in any community (s_max = " + std::to_string(params.s_max) + ")");
    }

    // 2. Community sizes: power law until they cover n, last size adjusted.
    std::vector<int> sizes;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        sizes.clear();
        long long sum = 0;
        while (sum < params.n) {
            int s = static_cast<int>(std::llround(sample_powerlaw(
                rng, params.beta, static_cast<double>(params.s_min), static_cast<double>(params.s_max))));
            s = std::clamp(s, params.s_min, params.s_max);
            sizes.push_back(s);
            sum += s;
        }
        long long excess = sum - params.n;
        if (excess == 0) break;
        if (sizes.back() - excess >= params.s_min) {
            sizes.back() -= static_cast<int>(excess);
            break;
        }
        // resample the last size on the next attempt
        sizes.clear();
    }
    if (sizes.empty()) throw DataError("gen_lfr: could not realize community sizes summing to n");

    int m = static_cast<int>(sizes.size());

    // 3. Node-to-community assignment with capacity and fit constraints:
    //    homeless nodes pick random communities; full communities evict a
    //    random member.
    std::vector<int> community(params.n, -1);
    std::vector<std::vector<int>> members(m);
    {
        std::vector<int> homeless(params.n);
        std::iota(homeless.begin(), homeless.end(), 0);
        std::shuffle(homeless.begin(), homeless.end(), rng);
        std::uniform_int_distribution<int> pick_comm(0, m - 1);
        long long guard = 0, guard_max = 200LL * params.n;
        while (!homeless.empty()) {
            if (++guard > guard_max)
                throw DataError("gen_lfr: community assignment did not converge");
            int v = homeless.back();
            int c = pick_comm(rng);
            if (internal_deg[v] >= sizes[c]) continue;  // community too small for v
            homeless.pop_back();
            members[c].push_back(v);
            community[v] = c;
            if (static_cast<int>(members[c].size()) > sizes[c]) {
                std::uniform_int_distribution<std::size_t> pick_member(0, members[c].size() - 1);
                std::size_t idx = pick_member(rng);
                int evicted = members[c][idx];
                members[c][idx] = members[c].back();
                members[c].pop_back();
                community[evicted] = -1;
                homeless.push_back(evicted);
            }
        }
    }

    EdgeSet edges;

    // 4a. Internal wiring: per-community configuration model plus swap-based
    //     cleanup of self-loops and duplicates.
    for (int c = 0; c < m; ++c) {
        // community-local copy so parity fixes stay local
        std::vector<int> want;  // stubs
        // make internal stub sum even by moving one stub to the external side
        long long stub_sum = 0;
        for (int v : members[c]) stub_sum += internal_deg[v];
        if (stub_sum % 2 != 0) {
            for (int v : members[c]) {
                if (internal_deg[v] > 0) {
                    --internal_deg[v];
                    ++external_deg[v];
                    break;
                }
            }
        }
        for (int v : members[c])
            for (int s = 0; s < internal_deg[v]; ++s) want.push_back(v);
        std::shuffle(want.begin(), want.end(), rng);
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i + 1 < want.size(); i += 2) pairs.emplace_back(want[i], want[i + 1]);

        // swap sweeps: replace self-loops/duplicates by crossing two pairs
        EdgeSet local;
        std::vector<std::pair<int, int>> bad;
        for (auto& pr : pairs) {
            if (pr.first != pr.second && local.insert(pr.first, pr.second)) continue;
            bad.push_back(pr);
        }
        for (int sweep = 0; sweep < 2000 && !bad.empty(); ++sweep) {
            auto [u, v] = bad.back();
            if (local.edges.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, local.edges.size() - 1);
            auto it = local.edges.begin();
            std::advance(it, pick(rng));
            auto [x, y] = *it;
            // try (u,x) and (v,y)
            if (u != x && v != y && !local.contains(u, x) && !local.contains(v, y) &&
                !(u == y && v == x)) {
                local.erase(x, y);
                local.insert(u, x);
                local.insert(v, y);
                bad.pop_back();
            }
        }
        // any leftover bad pairs are dropped; their stubs become slack, which
        // the mu audit below will catch if it matters
        for (auto [u, v] : local.edges) edges.insert(u, v);
    }

    // 4b. External wiring: global configuration model over external stubs,
    //     then rewiring sweeps against self-loops, duplicates and
    //     intra-community placements.
    {
        long long ext_sum = 0;
        for (int v = 0; v < params.n; ++v) ext_sum += external_deg[v];
        if (ext_sum % 2 != 0) {
            // move one stub to the internal side of some node (or drop it)
            for (int v = 0; v < params.n; ++v) {
                if (external_deg[v] > 0) {
                    --external_deg[v];
                    break;
                }
            }
        }
        std::vector<int> stubs;
        for (int v = 0; v < params.n; ++v)
            for (int s = 0; s < external_deg[v]; ++s) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) pairs.emplace_back(stubs[i], stubs[i + 1]);

        EdgeSet ext;
        auto ok = [&](int u, int v) {
            return u != v && community[u] != community[v] && !ext.contains(u, v) && !edges.contains(u, v);
        };
        std::vector<std::pair<int, int>> bad;
        for (auto& pr : pairs) {
            if (ok(pr.first, pr.second)) {
                ext.insert(pr.first, pr.second);
            } else {
                bad.push_back(pr);
            }
        }
        std::size_t sweeps = 0;
        while (!bad.empty() && sweeps < 1000) {
            ++sweeps;
            std::vector<std::pair<int, int>> next_bad;
            for (auto [u, v] : bad) {
                bool fixed = false;
                for (int tries = 0; tries < 50 && !fixed && !ext.edges.empty(); ++tries) {
                    std::uniform_int_distribution<std::size_t> pick(0, ext.edges.size() - 1);
                    auto it = ext.edges.begin();
                    std::advance(it, pick(rng));
                    auto [x, y] = *it;
                    if (ok(u, x) && ok(v, y) && u != x && v != y) {
                        ext.erase(x, y);
                        ext.insert(u, x);
                        ext.insert(v, y);
                        fixed = true;
                    }
                }
                if (!fixed) next_bad.emplace_back(u, v);
            }
            if (next_bad.size() == bad.size()) break;  // no progress
            bad = std::move(next_bad);
        }
        for (auto [u, v] : ext.edges) edges.insert(u, v);
    }

    // 5. Audit the realized mixing fraction.
    {
        double frac_sum = 0.0;
        int counted = 0;
        std::vector<int> deg(params.n, 0), ext(params.n, 0);
        for (auto [u, v] : edges.edges) {
            ++deg[u];
            ++deg[v];
            if (community[u] != community[v]) {
                ++ext[u];
                ++ext[v];
            }
        }
        for (int v = 0; v < params.n; ++v) {
            if (deg[v] == 0) continue;
            frac_sum += static_cast<double>(ext[v]) / deg[v];
            ++counted;
        }
        double achieved = counted ? frac_sum / counted : 0.0;
        if (std::abs(achieved - params.mu) > 0.05) {
            std::ostringstream msg;
            msg << "gen_lfr: rewiring did not converge, achieved mu " << achieved << " vs requested "
                << params.mu;
            throw DataError(msg.str());
        }
    }

    std::vector<std::pair<std::string, std::string>> edge_labels;
    edge_labels.reserve(edges.edges.size());
    for (auto [u, v] : edges.edges) edge_labels.emplace_back(lab(u), lab(v));
    std::vector<std::string> nodes;
    for (int i = 0; i < params.n; ++i) nodes.push_back(lab(i));
    Graph g = Graph::from_edges(edge_labels, nodes, nullptr);
    std::vector<CommunityId> truth(community.begin(), community.end());
    return {std::move(g), Partition(std::move(truth))};
}

double f2_closed_random_split(long long n1, long long n2) {
    if (n1 < 2 || n2 < 2) throw DataError("f2_closed_random_split requires n1, n2 >= 2");
    double total = static_cast<double>(n1 + n2 - 1);
    return 1.0 - (2.0 * static_cast<double>(n1) * static_cast<double>(n2) - 1.0) / (total * total);
}

double f2_closed_ring(long long l, long long p, long long h) {
    if (l < 3 || p < 3) throw DataError("f2_closed_ring requires l >= 3 and p >= 3");
    if (h < 1 || h > l || l % h != 0) throw DataError("f2_closed_ring requires h dividing l");
    double pp = static_cast<double>(p * (p - 1));
    if (h == 1) {
        double term = pp / (pp + 2.0);
        return static_cast<double>(l) * term * term;
    }
    double hh = static_cast<double>(h);
    double term = (pp * hh + 2.0 * (hh - 1.0)) / (pp * hh + 2.0 * hh);
    return (static_cast<double>(l) / hh) * term * term;
}

double f2_closed_pq(long long p, long long q, bool merged) {
    if (!(p > q && q >= 3)) throw DataError("f2_closed_pq requires p > q >= 3");
    double pp = static_cast<double>(p * (p - 1));
    double qq = static_cast<double>(q * (q - 1));
    double a = pp / (pp + 1.0);
    double b = pp / (pp + 3.0);
    double value = a * a + b * b;
    if (merged) {
        double c = (2.0 * qq + 2.0) / (2.0 * qq + 4.0);
        value += c * c;
    } else {
        double c = qq / (qq + 2.0);
        value += 2.0 * c * c;
    }
    return value;
}

}  // namespace commdet
