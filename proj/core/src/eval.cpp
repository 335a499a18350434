#include "commdet/eval.hpp"

#include <cmath>

namespace commdet {

ConfusionMatrix confusion_matrix(const Partition& reference, const Partition& found) {
    if (reference.node_count() != found.node_count())
        throw DataError("confusion_matrix: partitions cover different node counts (" +
                        std::to_string(reference.node_count()) + " vs " +
                        std::to_string(found.node_count()) + ")");
    ConfusionMatrix cm;
    int rows = reference.community_count();
    int cols = found.community_count();
    cm.counts.assign(rows, std::vector<long long>(cols, 0));
    cm.row_sums.assign(rows, 0);
    cm.col_sums.assign(cols, 0);
    cm.n = reference.node_count();
    for (NodeId v = 0; v < reference.node_count(); ++v) {
        int i = reference.community_of(v);
        int j = found.community_of(v);
        ++cm.counts[i][j];
        ++cm.row_sums[i];
        ++cm.col_sums[j];
    }
    return cm;
}

double nmi(const Partition& reference, const Partition& found) {
    if (reference.node_count() == 0) throw DataError("nmi: empty partitions");
    ConfusionMatrix cm = confusion_matrix(reference, found);
    double n = static_cast<double>(cm.n);

    double numerator = 0.0;
    for (std::size_t i = 0; i < cm.counts.size(); ++i) {
        for (std::size_t j = 0; j < cm.counts[i].size(); ++j) {
            long long nij = cm.counts[i][j];
            if (nij == 0) continue;
            numerator += static_cast<double>(nij) *
                         std::log(static_cast<double>(nij) * n /
                                  (static_cast<double>(cm.row_sums[i]) * cm.col_sums[j]));
        }
    }
    numerator *= -2.0;

    double denominator = 0.0;
    for (long long ri : cm.row_sums) denominator += static_cast<double>(ri) * std::log(ri / n);
    for (long long cj : cm.col_sums) denominator += static_cast<double>(cj) * std::log(cj / n);

    if (denominator == 0.0) {
        // both partitions trivial (single community each): identical clusterings
        return numerator == 0.0 ? 1.0 : 0.0;
    }
    if (numerator == 0.0) return 0.0;
    return numerator / denominator;
}

}  // namespace commdet
