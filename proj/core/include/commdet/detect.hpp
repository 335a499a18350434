#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "commdet/centrality.hpp"
#include "commdet/graph.hpp"
#include "commdet/modularity.hpp"

namespace commdet {

enum class TieBreak { random, deterministic };
enum class ZeroGain { reject, accept };

struct DetectionConfig {
    ModularityFunction objective = ModularityFunction::f2;
    int restarts = 10;
    std::uint64_t seed = 0;
    double lci_threshold = 0.0;
    TieBreak tie_break = TieBreak::random;
    ZeroGain zero_gain = ZeroGain::reject;
};

struct DetectionResult {
    Partition partition;
    double objective_value = 0.0;  // pre-residual score of the winning restart
    int restart_index = 0;
    std::vector<NodeId> central_nodes;
    std::vector<NodeId> residual_nodes;
    std::map<NodeId, NodeId> residual_paths;  // residual node -> adopted neighbor
    std::vector<double> per_restart_scores;
    std::size_t unreachable_singletons = 0;
};

using Rng = std::mt19937_64;

/// Grow one community greedily from `seed`: repeatedly add the unassigned
/// neighbor with the best objective gain, stopping when no candidate improves.
CommunityState expand_community(const Graph& graph, NodeId seed, const PartialPartition& assigned,
                                const DetectionConfig& config, Rng& rng);

/// One expansion pass: visit central nodes in random order, expanding each
/// still-unassigned one. Non-central nodes may remain unassigned.
PartialPartition detect_once(const Graph& graph, const std::vector<NodeId>& centrals,
                             const DetectionConfig& config, Rng& rng);

/// Multi-round sweep: each unassigned node joins the community of its
/// highest-LCI assigned neighbor; rounds use the round-start state. Nodes
/// with no path to any community become singletons (counted in the result).
Partition assign_residuals(const Graph& graph, const PartialPartition& partial,
                           const std::vector<std::optional<double>>& lci,
                           std::map<NodeId, NodeId>* paths = nullptr,
                           std::size_t* unreachable = nullptr);

/// Full pipeline: restart expansion config.restarts times, keep the run with
/// the best pre-residual score, then allocate residual nodes.
DetectionResult detect(const Graph& graph, const DetectionConfig& config);

/// Pre-residual objective value of a partial partition: the sum of
/// per-community terms over the formed communities.
double partial_score(const Graph& graph, const PartialPartition& partial,
                     ModularityFunction objective);

}  // namespace commdet
