#include "qsearch/encoding.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsearch/bits.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

ValueCodebook::ValueCodebook() : key_fn_([](std::uint64_t v) { return v; }) {}

ValueCodebook::ValueCodebook(KeyFn key_fn) : key_fn_(std::move(key_fn)) {
    if (!key_fn_) {
        throw std::invalid_argument("codebook key function must be callable");
    }
}

void ValueCodebook::seed_targets(const std::vector<std::uint64_t> &targets) {
    for (std::uint64_t t : targets) {
        const std::uint64_t key = key_fn_(t);
        if (std::find(seen_.begin(), seen_.end(), key) != seen_.end()) {
            throw std::invalid_argument("target values must be distinct");
        }
        seen_.push_back(key);
    }
}

std::size_t ValueCodebook::id_for(std::uint64_t value) {
    const std::uint64_t key = key_fn_(value);
    const auto it = std::find(seen_.begin(), seen_.end(), key);
    if (it != seen_.end()) {
        return static_cast<std::size_t>(it - seen_.begin());
    }
    seen_.push_back(key);
    return seen_.size() - 1;
}

Dataset update_values(const Dataset &data, const std::vector<std::uint64_t> &targets) {
    if (data.empty()) {
        throw std::invalid_argument("dataset must be non-empty");
    }
    if (targets.empty()) {
        throw std::invalid_argument("target list must be non-empty");
    }
    ValueCodebook codebook;
    codebook.seed_targets(targets);
    Dataset out;
    out.items.reserve(data.size());
    for (const DataPoint &p : data.items) {
        out.items.push_back({p.index, codebook.id_for(p.value)});
    }
    return out;
}

IndexMapping::IndexMapping(std::vector<std::uint64_t> originals)
    : originals_(std::move(originals)) {}

std::uint64_t IndexMapping::original_of(std::uint64_t fresh) const {
    if (fresh >= originals_.size()) {
        throw InconsistencyError("fresh index " + std::to_string(fresh) +
                                 " has no recorded original");
    }
    return originals_[fresh];
}

IndexMapping update_indexes(const Dataset &data) {
    if (data.empty()) {
        throw std::invalid_argument("dataset must be non-empty");
    }
    std::vector<std::uint64_t> originals;
    originals.reserve(data.size());
    for (const DataPoint &p : data.items) {
        originals.push_back(p.index);
    }
    return IndexMapping(std::move(originals));
}

Dataset maintain_indexes(const Dataset &fresh_keyed, const IndexMapping &mapping) {
    Dataset out;
    out.items.reserve(fresh_keyed.size());
    for (const DataPoint &p : fresh_keyed.items) {
        out.items.push_back({mapping.original_of(p.index), p.value});
    }
    return out;
}

QubitWidths compute_qubits(const Dataset &data) {
    if (data.empty()) {
        throw std::invalid_argument("dataset must be non-empty");
    }
    std::uint64_t max_index = 0;
    std::set<std::uint64_t> distinct;
    for (const DataPoint &p : data.items) {
        max_index = std::max(max_index, p.index);
        distinct.insert(p.value);
    }
    return QubitWidths{bits_for_count(max_index + 1), bits_for_count(distinct.size())};
}

EncodedProblem generate_binary_pairs(const Dataset &data, std::size_t target_id_count) {
    EncodedProblem out;
    out.widths = compute_qubits(data);
    out.universe.reserve(data.size());
    for (const DataPoint &p : data.items) {
        // to_bitstring rejects any index or value that overflows its field
        std::string bits = to_bitstring(p.index, out.widths.index_bits) +
                           to_bitstring(p.value, out.widths.value_bits);
        if (p.value < target_id_count) {
            out.marked.insert(bits);
        }
        out.universe.push_back(std::move(bits));
    }
    return out;
}

Dataset decode(const ProbabilityMap &survivors, QubitWidths widths) {
    const std::size_t want = static_cast<std::size_t>(widths.total());
    struct Row {
        double probability;
        DataPoint point;
    };
    std::vector<Row> rows;
    rows.reserve(survivors.size());
    for (const auto &[bits, p] : survivors.entries) {
        if (bits.size() != want) {
            throw std::invalid_argument("encoded state '" + bits + "' does not have width " +
                                        std::to_string(want));
        }
        const std::uint64_t index =
            from_bitstring(bits.substr(0, static_cast<std::size_t>(widths.index_bits)));
        const std::uint64_t value =
            from_bitstring(bits.substr(static_cast<std::size_t>(widths.index_bits)));
        rows.push_back({p, {index, value}});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
        if (a.probability != b.probability) {
            return a.probability > b.probability;
        }
        return a.point.index < b.point.index;
    });

    Dataset out;
    out.items.reserve(rows.size());
    std::set<std::uint64_t> seen;
    for (const Row &row : rows) {
        if (!seen.insert(row.point.index).second) {
            throw InconsistencyError("index " + std::to_string(row.point.index) +
                                     " decoded with more than one value");
        }
        out.items.push_back(row.point);
    }
    return out;
}

} // namespace qsearch
