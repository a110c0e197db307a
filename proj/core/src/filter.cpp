#include "qsearch/filter.hpp"

#include <cmath>
#include <stdexcept>

namespace qsearch {

ClusterState filter_clusters(const ProbabilityMap &probabilities, int max_passes) {
    if (probabilities.empty()) {
        throw std::invalid_argument("cannot cluster an empty probability map");
    }
    if (max_passes < 1) {
        throw std::invalid_argument("max_passes must be >= 1");
    }

    ClusterState state;
    state.centroid_high = probabilities.entries.begin()->second;
    state.centroid_low = state.centroid_high;
    for (const auto &[_, p] : probabilities.entries) {
        state.centroid_high = std::max(state.centroid_high, p);
        state.centroid_low = std::min(state.centroid_low, p);
    }

    while (state.passes < max_passes) {
        state.passes++;
        state.cluster_high.clear();
        state.cluster_low.clear();
        double sum_high = 0.0, sum_low = 0.0;
        for (const auto &[key, p] : probabilities.entries) {
            if (std::abs(p - state.centroid_high) < std::abs(p - state.centroid_low)) {
                state.cluster_high.insert(key);
                sum_high += p;
            } else {
                state.cluster_low.insert(key);
                sum_low += p;
            }
        }
        const double next_high = state.cluster_high.empty()
                                     ? state.centroid_high
                                     : sum_high / static_cast<double>(state.cluster_high.size());
        const double next_low = state.cluster_low.empty()
                                    ? state.centroid_low
                                    : sum_low / static_cast<double>(state.cluster_low.size());
        const bool converged =
            next_high == state.centroid_high && next_low == state.centroid_low;
        state.centroid_high = next_high;
        state.centroid_low = next_low;
        if (converged) {
            break;
        }
    }
    return state;
}

std::set<std::string> filter(const ProbabilityMap &probabilities, int max_passes) {
    return filter_clusters(probabilities, max_passes).chosen();
}

} // namespace qsearch
