#include "commdet/centrality.hpp"

#include <algorithm>

namespace commdet {

CentralityIndicator parse_indicator(std::string_view name) {
    if (name == "lci") return CentralityIndicator::lci;
    if (name == "gmd") return CentralityIndicator::gmd;
    if (name == "lmd") return CentralityIndicator::lmd;
    throw DataError("unknown centrality indicator: " + std::string(name));
}

std::optional<double> lci(const Graph& graph, NodeId node) {
    long long k = graph.degree(node);
    if (k == 0) return std::nullopt;
    long long s = 0;
    for (NodeId u : graph.neighbors(node)) s += graph.degree(u);
    // (k - S/k) / (k + S/k) == (k^2 - S) / (k^2 + S)
    return static_cast<double>(k * k - s) / static_cast<double>(k * k + s);
}

std::vector<std::optional<double>> lci_scores(const Graph& graph) {
    std::vector<std::optional<double>> scores(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) scores[v] = lci(graph, v);
    return scores;
}

std::vector<NodeId> central_nodes(const Graph& graph, double threshold) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (graph.degree(v) == 0) {
            out.push_back(v);  // isolated nodes become singleton seeds
            continue;
        }
        if (*lci(graph, v) >= threshold) out.push_back(v);
    }
    return out;
}

std::vector<NodeId> global_max_degree_nodes(const Graph& graph, int k) {
    if (k < 1 || k > graph.node_count())
        throw DataError("k out of range: " + std::to_string(k));
    std::vector<NodeId> order(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (graph.degree(a) != graph.degree(b)) return graph.degree(a) > graph.degree(b);
        return a < b;
    });
    std::vector<NodeId> out(order.begin(), order.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> local_max_degree_nodes(const Graph& graph) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        bool is_max = true;
        for (NodeId u : graph.neighbors(v)) {
            if (graph.degree(u) > graph.degree(v)) {
                is_max = false;
                break;
            }
        }
        if (is_max) out.push_back(v);
    }
    return out;
}

}  // namespace commdet
