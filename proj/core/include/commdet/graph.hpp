#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace commdet {

using NodeId = int;
using CommunityId = int;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphWarnings {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

/// Immutable simple undirected graph. Nodes carry external string labels;
/// internally they are dense ids 0..n-1 in label-insertion order.
class Graph {
public:
    Graph() = default;

    /// Build from labeled edge pairs. Labels in isolated_labels are interned
    /// first (fixing id order) and may end up with degree zero. Self-loops
    /// and duplicate edges are dropped and counted.
    static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                            const std::vector<std::string>& isolated_labels = {},
                            GraphWarnings* warnings = nullptr);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<NodeId> find_node(std::string_view label) const;

    double mean_degree() const {
        return node_count() == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count_) / node_count();
    }

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
    std::size_t edge_count_ = 0;
};

enum class GraphFormat { edgelist, gml };

GraphFormat parse_graph_format(std::string_view name);

/// Parse a graph from raw text. Edge list: two whitespace-separated tokens
/// per line, `#` comments ignored. GML: the `graph [ node [ id N ] edge [
/// source A target B ] ]` subset; other keys ignored.
Graph load_graph(std::string_view text, GraphFormat format, GraphWarnings* warnings = nullptr);

Graph load_graph_file(const std::string& path, GraphFormat format, GraphWarnings* warnings = nullptr);

/// Total assignment of nodes to communities 0..m-1, all non-empty.
class Partition {
public:
    Partition() = default;
    /// Assignments must cover 0..n-1; community ids are re-densified to
    /// 0..m-1 in order of first appearance.
    explicit Partition(std::vector<CommunityId> assignment);

    int node_count() const { return static_cast<int>(assignment_.size()); }
    int community_count() const { return community_count_; }
    CommunityId community_of(NodeId v) const { return assignment_[v]; }
    const std::vector<CommunityId>& assignment() const { return assignment_; }

    std::vector<std::vector<NodeId>> communities() const;

    bool same_clustering(const Partition& other) const;

private:
    std::vector<CommunityId> assignment_;
    int community_count_ = 0;
};

/// Partition under construction: nodes may be unassigned (-1).
class PartialPartition {
public:
    static constexpr CommunityId kUnassigned = -1;

    PartialPartition() = default;
    explicit PartialPartition(int node_count)
        : assignment_(node_count, kUnassigned) {}

    int node_count() const { return static_cast<int>(assignment_.size()); }
    bool is_assigned(NodeId v) const { return assignment_[v] != kUnassigned; }
    CommunityId community_of(NodeId v) const { return assignment_[v]; }
    int community_count() const { return next_community_; }

    CommunityId new_community() { return next_community_++; }
    void assign(NodeId v, CommunityId c) { assignment_[v] = c; }

    std::vector<NodeId> unassigned_nodes() const;
    const std::vector<CommunityId>& assignment() const { return assignment_; }

private:
    std::vector<CommunityId> assignment_;
    CommunityId next_community_ = 0;
};

/// One `label label` line per edge, ordered by internal id. Isolated nodes
/// are listed as `# isolated <label>` comment lines and are not recovered
/// by the parser.
std::string write_edgelist(const Graph& graph);

/// TSV `label<TAB>community`, one line per node, sorted by label.
std::string write_partition(const Partition& partition, const Graph& graph);

/// Inverse of write_partition; every graph node must appear exactly once.
Partition load_partition(std::string_view text, const Graph& graph);

Partition load_partition_file(const std::string& path, const Graph& graph);

}  // namespace commdet
