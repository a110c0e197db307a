#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/data.hpp"

namespace qsearch {

/// Shape constraints for a generated search problem.
struct ExperimentConfig {
    std::uint64_t items = 0;
    std::uint64_t target_multiplicity = 0; ///< data points carrying the target value
    std::uint64_t distinct_values = 0;
    std::uint64_t seed = 0;
};

struct GeneratedExperiment {
    Dataset data;
    std::vector<std::uint64_t> target_values; ///< a single value unless configured otherwise
};

/// Deterministic dataset construction: indexes 0..items-1, exactly
/// target_multiplicity items carrying the target value, every other distinct
/// value appearing at least once, remaining slots drawn uniformly from the
/// non-target values. Identical config -> identical dataset.
GeneratedExperiment generate_dataset(const ExperimentConfig &cfg);

/// The three standard benchmark configurations with pinned seeds:
///   exp1: 15 items,  5 targets, 11 distinct values -> widths (4, 4)
///   exp2: 40 items, 15 targets, 16 distinct values -> widths (6, 4)
///   exp3: 80 items, 20 targets, 26 distinct values -> widths (7, 5)
enum class Preset { Exp1, Exp2, Exp3 };

ExperimentConfig preset_config(Preset preset);
GeneratedExperiment preset_dataset(Preset preset);

std::optional<Preset> preset_from_name(const std::string &name);
std::string preset_name(Preset preset);

} // namespace qsearch
