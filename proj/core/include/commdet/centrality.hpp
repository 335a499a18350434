#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "commdet/graph.hpp"

namespace commdet {

enum class CentralityIndicator { lci, gmd, lmd };

CentralityIndicator parse_indicator(std::string_view name);

/// Local centrality of one node: (k - S/k) / (k + S/k) with k the node's
/// degree and S the sum of its neighbors' degrees. Empty for isolated nodes,
/// where the ratio is undefined.
std::optional<double> lci(const Graph& graph, NodeId node);

/// LCI for every node; isolated nodes get nullopt.
std::vector<std::optional<double>> lci_scores(const Graph& graph);

/// Nodes with lci >= threshold. Isolated nodes are always included so that
/// each seeds its own singleton community.
std::vector<NodeId> central_nodes(const Graph& graph, double threshold = 0.0);

/// The k nodes of highest degree; ties at the cut broken by ascending id.
std::vector<NodeId> global_max_degree_nodes(const Graph& graph, int k);

/// Nodes whose degree is >= the degree of every neighbor (ties included).
std::vector<NodeId> local_max_degree_nodes(const Graph& graph);

}  // namespace commdet
