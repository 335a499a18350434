#pragma once

#include <string_view>
#include <vector>

#include "commdet/graph.hpp"

namespace commdet {

enum class ModularityFunction { q, r, m, f, f2 };

ModularityFunction parse_modularity(std::string_view name);
std::string_view modularity_name(ModularityFunction fn);

struct ModularityScore {
    ModularityFunction function;
    double value = 0.0;  // may be +infinity for M
    std::vector<double> per_community;
};

/// One growing community: member set plus running degree counters.
/// d_in is twice the internal edge count, d_out the number of edges
/// leaving the community.
class CommunityState {
public:
    explicit CommunityState(int graph_nodes) : member_(graph_nodes, 0) {}

    static CommunityState seed(const Graph& graph, NodeId v);

    bool contains(NodeId v) const { return member_[v] != 0; }
    const std::vector<NodeId>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    long long d_in() const { return d_in_; }
    long long d_out() const { return d_out_; }

    /// Number of the candidate's neighbors already inside the community.
    int internal_links(const Graph& graph, NodeId v) const;

    void add(const Graph& graph, NodeId v);

private:
    std::vector<NodeId> members_;
    std::vector<char> member_;
    long long d_in_ = 0;
    long long d_out_ = 0;
};

/// Per-community degree counters for a full partition, in community order.
struct PartitionCounters {
    std::vector<long long> internal_edges;  // l_in
    std::vector<long long> degree_sum;      // d = d_in + d_out
    std::vector<long long> d_in;            // 2 * l_in
    std::vector<long long> d_out;
};

PartitionCounters partition_counters(const Graph& graph, const Partition& partition);

/// Newman's modularity: sum_i [ l_in(C_i)/L - (d(C_i)/2L)^2 ].
ModularityScore q_score(const Graph& graph, const Partition& partition);

/// Boundary sharpness: sum_i B_in/(B_in + B_out) over boundary-node edges;
/// a community with no boundary node contributes 1.
ModularityScore r_score(const Graph& graph, const Partition& partition);

/// Internal/external edge ratio: sum_i E_in/E_out, +infinity when E_out = 0.
ModularityScore m_score(const Graph& graph, const Partition& partition);

/// sum_i d_in / (d_in + d_out)^alpha; an isolated singleton contributes 0.
ModularityScore f_score(const Graph& graph, const Partition& partition, double alpha = 1.0);

/// [d_in / (d_in + d_out)]^2; 0 for an isolated singleton.
double f2_community(long long d_in, long long d_out);

ModularityScore f2_score(const Graph& graph, const Partition& partition);

/// F2 change from adding `candidate` to `state`, without mutating it.
double f2_delta(const CommunityState& state, NodeId candidate, const Graph& graph);

ModularityScore score_partition(const Graph& graph, const Partition& partition,
                                ModularityFunction fn, double alpha = 1.0);

}  // namespace commdet
