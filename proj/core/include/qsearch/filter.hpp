#pragma once

#include <set>
#include <string>

#include "qsearch/statevector.hpp"

namespace qsearch {

/// Snapshot of the two-centroid clustering after convergence.
struct ClusterState {
    double centroid_high = 0.0; ///< ce1, seeded with the max probability
    double centroid_low = 0.0;  ///< ce2, seeded with the min probability
    std::set<std::string> cluster_high;
    std::set<std::string> cluster_low;
    int passes = 0;

    const std::set<std::string> &chosen() const {
        return centroid_high > centroid_low ? cluster_high : cluster_low;
    }
};

/**
 * Two-means clustering over a probability map. Centroids start at the max and
 * min probabilities; every pass rebuilds both clusters, assigning each entry
 * to the strictly nearer centroid (ties go to the low cluster), then replaces
 * each centroid by its cluster mean (an empty cluster keeps its centroid).
 * Stops when both centroids are unchanged or after max_passes.
 */
ClusterState filter_clusters(const ProbabilityMap &probabilities, int max_passes = 100);

/// The cluster with the larger centroid — the potential targets. When the
/// final centroids are equal the low cluster (which then holds every entry)
/// is returned.
std::set<std::string> filter(const ProbabilityMap &probabilities, int max_passes = 100);

} // namespace qsearch
