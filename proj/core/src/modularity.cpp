#include "commdet/modularity.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace commdet {

ModularityFunction parse_modularity(std::string_view name) {
    if (name == "q") return ModularityFunction::q;
    if (name == "r") return ModularityFunction::r;
    if (name == "m") return ModularityFunction::m;
    if (name == "f") return ModularityFunction::f;
    if (name == "f2") return ModularityFunction::f2;
    throw DataError("unknown modularity function: " + std::string(name));
}

std::string_view modularity_name(ModularityFunction fn) {
    switch (fn) {
        case ModularityFunction::q: return "q";
        case ModularityFunction::r: return "r";
        case ModularityFunction::m: return "m";
        case ModularityFunction::f: return "f";
        case ModularityFunction::f2: return "f2";
    }
    return "?";
}

CommunityState CommunityState::seed(const Graph& graph, NodeId v) {
    CommunityState s(graph.node_count());
    s.members_.push_back(v);
    s.member_[v] = 1;
    s.d_out_ = graph.degree(v);
    return s;
}

int CommunityState::internal_links(const Graph& graph, NodeId v) const {
    int e = 0;
    for (NodeId u : graph.neighbors(v))
        if (member_[u]) ++e;
    return e;
}

void CommunityState::add(const Graph& graph, NodeId v) {
    assert(!member_[v]);
    int e = internal_links(graph, v);
    members_.push_back(v);
    member_[v] = 1;
    d_in_ += 2LL * e;
    d_out_ += graph.degree(v) - 2LL * e;
    assert(d_in_ % 2 == 0 && d_out_ >= 0);
}

PartitionCounters partition_counters(const Graph& graph, const Partition& partition) {
    int m = partition.community_count();
    PartitionCounters c;
    c.internal_edges.assign(m, 0);
    c.degree_sum.assign(m, 0);
    c.d_in.assign(m, 0);
    c.d_out.assign(m, 0);
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        CommunityId cv = partition.community_of(v);
        c.degree_sum[cv] += graph.degree(v);
        for (NodeId u : graph.neighbors(v)) {
            if (u < v) continue;  // each edge once
            if (partition.community_of(u) == cv) ++c.internal_edges[cv];
        }
    }
    for (int i = 0; i < m; ++i) {
        c.d_in[i] = 2 * c.internal_edges[i];
        c.d_out[i] = c.degree_sum[i] - c.d_in[i];
    }
    return c;
}

namespace {

ModularityScore make_score(ModularityFunction fn, std::vector<double> per_community) {
    ModularityScore s;
    s.function = fn;
    s.per_community = std::move(per_community);
    s.value = 0.0;
    for (double v : s.per_community) s.value += v;
    return s;
}

}  // namespace

ModularityScore q_score(const Graph& graph, const Partition& partition) {
    if (graph.edge_count() == 0) throw DataError("Q is undefined on an edgeless graph");
    auto c = partition_counters(graph, partition);
    double L = static_cast<double>(graph.edge_count());
    std::vector<double> per;
    per.reserve(c.internal_edges.size());
    for (std::size_t i = 0; i < c.internal_edges.size(); ++i) {
        double frac = static_cast<double>(c.degree_sum[i]) / (2.0 * L);
        per.push_back(static_cast<double>(c.internal_edges[i]) / L - frac * frac);
    }
    return make_score(ModularityFunction::q, std::move(per));
}

ModularityScore r_score(const Graph& graph, const Partition& partition) {
    int m = partition.community_count();
    std::vector<double> per(m, 0.0);
    auto comms = partition.communities();
    for (int i = 0; i < m; ++i) {
        std::vector<char> boundary(graph.node_count(), 0);
        for (NodeId v : comms[i]) {
            for (NodeId u : graph.neighbors(v)) {
                if (partition.community_of(u) != i) {
                    boundary[v] = 1;
                    break;
                }
            }
        }
        long long b_in = 0, b_out = 0;
        for (NodeId v : comms[i]) {
            if (!boundary[v]) continue;
            for (NodeId u : graph.neighbors(v)) {
                if (partition.community_of(u) != i) {
                    ++b_out;
                } else if (!boundary[u] || u > v) {
                    // internal edge touching a boundary node, counted once
                    ++b_in;
                }
            }
        }
        per[i] = (b_in + b_out == 0) ? 1.0
                                     : static_cast<double>(b_in) / static_cast<double>(b_in + b_out);
    }
    return make_score(ModularityFunction::r, std::move(per));
}

ModularityScore m_score(const Graph& graph, const Partition& partition) {
    auto c = partition_counters(graph, partition);
    std::vector<double> per;
    per.reserve(c.internal_edges.size());
    for (std::size_t i = 0; i < c.internal_edges.size(); ++i) {
        if (c.d_out[i] == 0) {
            per.push_back(std::numeric_limits<double>::infinity());
        } else {
            per.push_back(static_cast<double>(c.internal_edges[i]) / static_cast<double>(c.d_out[i]));
        }
    }
    return make_score(ModularityFunction::m, std::move(per));
}

ModularityScore f_score(const Graph& graph, const Partition& partition, double alpha) {
    auto c = partition_counters(graph, partition);
    std::vector<double> per;
    per.reserve(c.d_in.size());
    for (std::size_t i = 0; i < c.d_in.size(); ++i) {
        long long total = c.d_in[i] + c.d_out[i];
        if (total == 0) {
            per.push_back(0.0);  // isolated singleton
        } else {
            per.push_back(static_cast<double>(c.d_in[i]) / std::pow(static_cast<double>(total), alpha));
        }
    }
    return make_score(ModularityFunction::f, std::move(per));
}

double f2_community(long long d_in, long long d_out) {
    long long total = d_in + d_out;
    if (total == 0) return 0.0;  // isolated singleton
    double ratio = static_cast<double>(d_in) / static_cast<double>(total);
    return ratio * ratio;
}

ModularityScore f2_score(const Graph& graph, const Partition& partition) {
    auto c = partition_counters(graph, partition);
    std::vector<double> per;
    per.reserve(c.d_in.size());
    for (std::size_t i = 0; i < c.d_in.size(); ++i) per.push_back(f2_community(c.d_in[i], c.d_out[i]));
    return make_score(ModularityFunction::f2, std::move(per));
}

double f2_delta(const CommunityState& state, NodeId candidate, const Graph& graph) {
    assert(!state.contains(candidate));
    int e = state.internal_links(graph, candidate);
    long long d_in_after = state.d_in() + 2LL * e;
    long long d_out_after = state.d_out() + graph.degree(candidate) - 2LL * e;
    return f2_community(d_in_after, d_out_after) - f2_community(state.d_in(), state.d_out());
}

ModularityScore score_partition(const Graph& graph, const Partition& partition,
                                ModularityFunction fn, double alpha) {
    switch (fn) {
        case ModularityFunction::q: return q_score(graph, partition);
        case ModularityFunction::r: return r_score(graph, partition);
        case ModularityFunction::m: return m_score(graph, partition);
        case ModularityFunction::f: return f_score(graph, partition, alpha);
        case ModularityFunction::f2: return f2_score(graph, partition);
    }
    throw DataError("unreachable modularity function");
}

}  // namespace commdet
