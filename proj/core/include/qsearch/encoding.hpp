#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qsearch/data.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

/**
 * Ordered list of value keys; a value's compressed id is its position. The
 * key function defaults to the identity, which is exact for integer payloads;
 * swapping in a digest keeps the rest of the pipeline unchanged for payloads
 * that are not small integers.
 */
class ValueCodebook {
  public:
    using KeyFn = std::function<std::uint64_t(std::uint64_t)>;

    ValueCodebook();
    explicit ValueCodebook(KeyFn key_fn);

    /// Appends the keys of the target values, defining ids 0..|targets|-1.
    /// Targets must be distinct.
    void seed_targets(const std::vector<std::uint64_t> &targets);

    /// Position of the value's key, appending it first if unseen.
    std::size_t id_for(std::uint64_t value);

    std::size_t size() const { return seen_.size(); }
    const std::vector<std::uint64_t> &keys() const { return seen_; }

  private:
    KeyFn key_fn_;
    std::vector<std::uint64_t> seen_;
};

/// Replaces every value by its codebook position: target values take ids
/// 0..|targets|-1 in target order, unseen values are appended in first
/// occurrence order. Indexes and item order are preserved.
Dataset update_values(const Dataset &data, const std::vector<std::uint64_t> &targets);

/// Fresh index k -> original index, in dataset iteration order.
class IndexMapping {
  public:
    explicit IndexMapping(std::vector<std::uint64_t> originals);

    std::uint64_t original_of(std::uint64_t fresh) const;
    std::size_t size() const { return originals_.size(); }
    const std::vector<std::uint64_t> &originals() const { return originals_; }

  private:
    std::vector<std::uint64_t> originals_;
};

/// Assigns fresh indexes 0..|data|-1 in iteration order and records the
/// fresh -> original pairing.
IndexMapping update_indexes(const Dataset &data);

/// Rekeys a fresh-indexed dataset back to original indexes; values unchanged.
/// A fresh index absent from the mapping raises InconsistencyError.
Dataset maintain_indexes(const Dataset &fresh_keyed, const IndexMapping &mapping);

struct QubitWidths {
    int index_bits = 0;
    int value_bits = 0;

    int total() const { return index_bits + value_bits; }
    friend bool operator==(const QubitWidths &, const QubitWidths &) = default;
};

/// Register widths for a dataset: enough index bits to address max_index and
/// enough value bits for the distinct value count, each at least 1.
QubitWidths compute_qubits(const Dataset &data);

/// A dataset rendered as fixed-width basis bitstrings for the quantum stage.
struct EncodedProblem {
    QubitWidths widths;
    std::vector<std::string> universe; ///< one bitstring per item, item order
    std::set<std::string> marked;      ///< universe entries whose value id is a target id
};

/// Bitstring per item: zero-padded binary index concatenated with zero-padded
/// binary value. Items whose value id is below `target_id_count` are marked.
EncodedProblem generate_binary_pairs(const Dataset &data, std::size_t target_id_count);

/// Splits each surviving bitstring back into an (index, value) record,
/// ordered by descending probability then ascending index.
Dataset decode(const ProbabilityMap &survivors, QubitWidths widths);

} // namespace qsearch
