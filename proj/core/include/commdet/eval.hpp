#pragma once

#include <vector>

#include "commdet/graph.hpp"

namespace commdet {

/// Overlap counts between a reference partition (rows) and a found
/// partition (columns).
struct ConfusionMatrix {
    std::vector<std::vector<long long>> counts;
    std::vector<long long> row_sums;
    std::vector<long long> col_sums;
    long long n = 0;
};

ConfusionMatrix confusion_matrix(const Partition& reference, const Partition& found);

/// Normalized mutual information in [0, 1]; 1 for identical clusterings,
/// 0 for independent ones.
double nmi(const Partition& reference, const Partition& found);

}  // namespace commdet
