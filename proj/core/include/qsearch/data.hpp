#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace qsearch {

struct DataPoint {
    std::uint64_t index = 0;
    std::uint64_t value = 0;

    friend bool operator==(const DataPoint &, const DataPoint &) = default;
};

/// Ordered (index, value) records; the order is the canonical iteration order
/// for every transformation that walks a dataset. Indexes must be unique.
struct Dataset {
    std::vector<DataPoint> items;

    bool empty() const { return items.empty(); }
    std::size_t size() const { return items.size(); }

    /// Key -> value view, for order-insensitive comparison of two datasets.
    std::map<std::uint64_t, std::uint64_t> as_map() const {
        std::map<std::uint64_t, std::uint64_t> out;
        for (const DataPoint &p : items) {
            out.emplace(p.index, p.value);
        }
        return out;
    }

    friend bool operator==(const Dataset &, const Dataset &) = default;
};

} // namespace qsearch
