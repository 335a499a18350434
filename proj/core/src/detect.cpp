#include "commdet/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace commdet {

namespace {

constexpr double kEps = 1e-12;

// Comparable per-community objective value. Exact rational (den == 0 means
// +infinity) for q/m/f/f2; floating approximation for r.
struct Key {
    bool rational = true;
    long long num = 0;
    long long den = 1;
    double approx = 0.0;

    static Key exact(long long num, long long den) { return Key{true, num, den, 0.0}; }
    static Key infinity() { return Key{true, 1, 0, 0.0}; }
    static Key inexact(double v) { return Key{false, 0, 1, v}; }
};

int compare_keys(const Key& a, const Key& b) {
    if (a.rational && b.rational) {
        bool ainf = a.den == 0, binf = b.den == 0;
        if (ainf || binf) return (ainf ? 1 : 0) - (binf ? 1 : 0);
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }
    double av = a.rational ? (a.den == 0 ? std::numeric_limits<double>::infinity()
                                         : static_cast<double>(a.num) / a.den)
                           : a.approx;
    double bv = b.rational ? (b.den == 0 ? std::numeric_limits<double>::infinity()
                                         : static_cast<double>(b.num) / b.den)
                           : b.approx;
    if (std::abs(av - bv) <= kEps) return 0;
    return av < bv ? -1 : 1;
}

// R term of the member set (bitmap), with `extra` treated as a member when >= 0.
double r_term(const Graph& graph, const std::vector<char>& member, NodeId extra) {
    auto inside = [&](NodeId v) { return member[v] != 0 || v == extra; };
    long long b_in = 0, b_out = 0;
    bool any_member = false;
    auto visit = [&](NodeId v) {
        any_member = true;
        bool v_boundary = false;
        for (NodeId u : graph.neighbors(v))
            if (!inside(u)) {
                v_boundary = true;
                break;
            }
        if (!v_boundary) return;
        for (NodeId u : graph.neighbors(v)) {
            if (!inside(u)) {
                ++b_out;
            } else {
                // internal edge touching a boundary node, counted once: defer
                // to the lower-id endpoint when both are boundary
                bool u_boundary = false;
                for (NodeId w : graph.neighbors(u))
                    if (!inside(w)) {
                        u_boundary = true;
                        break;
                    }
                if (!u_boundary || u > v) ++b_in;
            }
        }
    };
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (member[v]) visit(v);
    if (extra >= 0) visit(extra);
    if (!any_member && extra < 0) return 0.0;
    return (b_in + b_out == 0) ? 1.0 : static_cast<double>(b_in) / static_cast<double>(b_in + b_out);
}

struct MemberView {
    const std::vector<char>* member;
    NodeId extra;  // -1 for none
};

// Key of a community with counters (d_in, d_out) under `objective`.
Key counters_key(ModularityFunction objective, long long d_in, long long d_out, long long total_edges) {
    long long tot = d_in + d_out;
    switch (objective) {
        case ModularityFunction::f2:
        case ModularityFunction::f:
            // Both are monotone in the ratio d_in/tot for a single community.
            if (tot == 0) return Key::exact(0, 1);
            return Key::exact(d_in, tot);
        case ModularityFunction::q:
            // q term scaled by the constant 4L^2: 2L*d_in - (d_in + d_out)^2
            return Key::exact(2 * total_edges * d_in - tot * tot, 1);
        case ModularityFunction::m:
            if (d_out == 0) return Key::infinity();
            return Key::exact(d_in, 2 * d_out);  // E_in/E_out
        case ModularityFunction::r:
            break;  // handled by the caller, needs membership
    }
    throw DataError("counters_key: objective needs membership");
}

class Expander {
public:
    Expander(const Graph& graph, const DetectionConfig& config, Rng& rng)
        : graph_(graph), config_(config), rng_(rng) {}

    CommunityState run(NodeId seed, const PartialPartition& assigned) {
        CommunityState state = CommunityState::seed(graph_, seed);
        std::vector<char> in_frontier(graph_.node_count(), 0);
        std::vector<NodeId> frontier;
        auto push_neighbors = [&](NodeId v) {
            for (NodeId u : graph_.neighbors(v)) {
                if (assigned.is_assigned(u) || state.contains(u) || in_frontier[u]) continue;
                in_frontier[u] = 1;
                frontier.push_back(u);
            }
        };
        push_neighbors(seed);

        while (!frontier.empty()) {
            Key current = community_key(state, -1);
            Key best{};
            std::vector<std::size_t> best_idx;
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                Key k = candidate_key(state, frontier[i]);
                if (best_idx.empty()) {
                    best = k;
                    best_idx.push_back(i);
                    continue;
                }
                int cmp = compare_keys(k, best);
                if (cmp > 0) {
                    best = k;
                    best_idx.assign(1, i);
                } else if (cmp == 0) {
                    best_idx.push_back(i);
                }
            }
            int gain = compare_keys(best, current);
            bool take = config_.zero_gain == ZeroGain::accept ? gain >= 0 : gain > 0;
            if (!take) break;

            std::size_t chosen = pick(best_idx, frontier);
            NodeId v = frontier[chosen];
            frontier[chosen] = frontier.back();
            frontier.pop_back();
            in_frontier[v] = 0;
            state.add(graph_, v);
            push_neighbors(v);
        }
        return state;
    }

private:
    Key community_key(const CommunityState& state, NodeId extra) const {
        if (config_.objective == ModularityFunction::r) {
            // rebuild bitmap from state members; extra handled inside r_term
            return Key::inexact(r_term(graph_, member_bitmap(state), extra));
        }
        long long d_in = state.d_in(), d_out = state.d_out();
        if (extra >= 0) {
            int e = state.internal_links(graph_, extra);
            d_in += 2LL * e;
            d_out += graph_.degree(extra) - 2LL * e;
        }
        return counters_key(config_.objective, d_in, d_out, static_cast<long long>(graph_.edge_count()));
    }

    Key candidate_key(const CommunityState& state, NodeId v) const { return community_key(state, v); }

    std::vector<char> member_bitmap(const CommunityState& state) const {
        std::vector<char> bitmap(graph_.node_count(), 0);
        for (NodeId v : state.members()) bitmap[v] = 1;
        return bitmap;
    }

    std::size_t pick(const std::vector<std::size_t>& tied, const std::vector<NodeId>& frontier) {
        if (tied.size() == 1) return tied[0];
        if (config_.tie_break == TieBreak::random) {
            std::uniform_int_distribution<std::size_t> dist(0, tied.size() - 1);
            return tied[dist(rng_)];
        }
        // deterministic: higher LCI, then lower node id
        std::size_t best = tied[0];
        auto score = [&](std::size_t i) {
            auto s = lci(graph_, frontier[i]);
            return s ? *s : -2.0;
        };
        for (std::size_t i : tied) {
            double si = score(i), sb = score(best);
            if (si > sb || (si == sb && frontier[i] < frontier[best])) best = i;
        }
        return best;
    }

    const Graph& graph_;
    const DetectionConfig& config_;
    Rng& rng_;
};

}  // namespace

CommunityState expand_community(const Graph& graph, NodeId seed, const PartialPartition& assigned,
                                const DetectionConfig& config, Rng& rng) {
    return Expander(graph, config, rng).run(seed, assigned);
}

PartialPartition detect_once(const Graph& graph, const std::vector<NodeId>& centrals,
                             const DetectionConfig& config, Rng& rng) {
    PartialPartition partial(graph.node_count());
    std::vector<NodeId> order = centrals;
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId seed : order) {
        if (partial.is_assigned(seed)) continue;
        CommunityState state = expand_community(graph, seed, partial, config, rng);
        CommunityId c = partial.new_community();
        for (NodeId v : state.members()) partial.assign(v, c);
    }
    return partial;
}

Partition assign_residuals(const Graph& graph, const PartialPartition& partial,
                           const std::vector<std::optional<double>>& lci_values,
                           std::map<NodeId, NodeId>* paths, std::size_t* unreachable) {
    std::vector<CommunityId> assignment = partial.assignment();
    CommunityId next_community = partial.community_count();

    std::vector<NodeId> pending;
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (assignment[v] == PartialPartition::kUnassigned) pending.push_back(v);

    while (!pending.empty()) {
        // Decisions within a round are made against the round-start state and
        // applied simultaneously.
        std::vector<std::pair<NodeId, NodeId>> adoptions;  // (node, adopted neighbor)
        for (NodeId v : pending) {
            NodeId best = -1;
            for (NodeId u : graph.neighbors(v)) {
                if (assignment[u] == PartialPartition::kUnassigned) continue;
                if (best == -1) {
                    best = u;
                    continue;
                }
                double lu = lci_values[u].value_or(-2.0);
                double lb = lci_values[best].value_or(-2.0);
                if (lu > lb || (lu == lb && u < best)) best = u;
            }
            if (best != -1) adoptions.emplace_back(v, best);
        }
        if (adoptions.empty()) break;
        std::vector<NodeId> still_pending;
        std::vector<char> adopted(graph.node_count(), 0);
        for (const auto& [v, u] : adoptions) {
            adopted[v] = 1;
            if (paths) paths->emplace(v, u);
        }
        for (NodeId v : pending)
            if (!adopted[v]) still_pending.push_back(v);
        for (const auto& [v, u] : adoptions) assignment[v] = assignment[u];
        pending = std::move(still_pending);
    }

    // No route to any community: singleton with a warning count.
    if (unreachable) *unreachable = pending.size();
    for (NodeId v : pending) assignment[v] = next_community++;

    return Partition(std::move(assignment));
}

double partial_score(const Graph& graph, const PartialPartition& partial,
                     ModularityFunction objective) {
    int m = partial.community_count();
    std::vector<long long> d_in(m, 0), degree_sum(m, 0);
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        CommunityId c = partial.community_of(v);
        if (c == PartialPartition::kUnassigned) continue;
        degree_sum[c] += graph.degree(v);
        for (NodeId u : graph.neighbors(v))
            if (partial.community_of(u) == c) ++d_in[c];  // counts both directions
    }
    double total = 0.0;
    for (int c = 0; c < m; ++c) {
        long long d_out = degree_sum[c] - d_in[c];
        switch (objective) {
            case ModularityFunction::f2:
                total += f2_community(d_in[c], d_out);
                break;
            case ModularityFunction::f:
                total += (d_in[c] + d_out) == 0 ? 0.0
                                                : static_cast<double>(d_in[c]) / (d_in[c] + d_out);
                break;
            case ModularityFunction::q: {
                double L = static_cast<double>(graph.edge_count());
                double frac = static_cast<double>(degree_sum[c]) / (2.0 * L);
                total += static_cast<double>(d_in[c]) / (2.0 * L) - frac * frac;
                break;
            }
            case ModularityFunction::m:
                total += d_out == 0 ? std::numeric_limits<double>::infinity()
                                    : static_cast<double>(d_in[c]) / (2.0 * d_out);
                break;
            case ModularityFunction::r: {
                std::vector<char> member(graph.node_count(), 0);
                for (NodeId v = 0; v < graph.node_count(); ++v)
                    if (partial.community_of(v) == c) member[v] = 1;
                total += r_term(graph, member, -1);
                break;
            }
        }
    }
    return total;
}

DetectionResult detect(const Graph& graph, const DetectionConfig& config) {
    if (config.restarts < 1) throw DataError("restarts must be >= 1");
    std::vector<NodeId> centrals = central_nodes(graph, config.lci_threshold);
    std::vector<std::optional<double>> lci_values = lci_scores(graph);

    PartialPartition best_partial;
    double best_score = -std::numeric_limits<double>::infinity();
    int best_restart = 0;
    std::vector<double> restart_scores;
    restart_scores.reserve(config.restarts);

    for (int r = 0; r < config.restarts; ++r) {
        std::seed_seq seq{config.seed, static_cast<std::uint64_t>(r)};
        Rng rng(seq);
        PartialPartition partial = detect_once(graph, centrals, config, rng);
        double score = partial_score(graph, partial, config.objective);
        restart_scores.push_back(score);
        if (score > best_score) {
            best_score = score;
            best_partial = std::move(partial);
            best_restart = r;
        }
    }

    DetectionResult result;
    result.central_nodes = centrals;
    result.residual_nodes = best_partial.unassigned_nodes();
    result.per_restart_scores = std::move(restart_scores);
    result.objective_value = best_score;
    result.restart_index = best_restart;
    result.partition = assign_residuals(graph, best_partial, lci_values, &result.residual_paths,
                                        &result.unreachable_singletons);
    return result;
}

}  // namespace commdet
