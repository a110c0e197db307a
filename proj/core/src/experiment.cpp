#include "qsearch/experiment.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsearch/encoding.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

GeneratedExperiment generate_dataset(const ExperimentConfig &cfg) {
    if (cfg.items == 0) {
        throw std::invalid_argument("experiment needs at least one item");
    }
    if (cfg.target_multiplicity == 0 || cfg.target_multiplicity > cfg.items) {
        throw std::invalid_argument("target multiplicity must be in [1, items]");
    }
    if (cfg.distinct_values == 0 || cfg.distinct_values > cfg.items) {
        throw std::invalid_argument("distinct value count must be in [1, items]");
    }
    // Non-target slots must cover every non-target value at least once.
    if (cfg.items - cfg.target_multiplicity < cfg.distinct_values - 1) {
        throw std::invalid_argument("not enough non-target slots to realize the distinct count");
    }
    if (cfg.distinct_values == 1 && cfg.target_multiplicity != cfg.items) {
        throw std::invalid_argument("a single distinct value forces every item to be a target");
    }

    Xoshiro256 rng(cfg.seed);

    // Draw the distinct value pool without replacement from a modest range so
    // raw values stay readable; the first drawn value is the search target.
    const std::uint64_t value_range = std::max<std::uint64_t>(100, 8 * cfg.distinct_values);
    std::vector<std::uint64_t> pool;
    pool.reserve(cfg.distinct_values);
    while (pool.size() < cfg.distinct_values) {
        const std::uint64_t candidate = rng.next_below(value_range);
        if (std::find(pool.begin(), pool.end(), candidate) == pool.end()) {
            pool.push_back(candidate);
        }
    }
    const std::uint64_t target_value = pool.front();

    std::vector<std::uint64_t> values;
    values.reserve(cfg.items);
    values.insert(values.end(), cfg.target_multiplicity, target_value);
    for (std::size_t i = 1; i < pool.size(); ++i) {
        values.push_back(pool[i]);
    }
    while (values.size() < cfg.items) {
        values.push_back(pool[1 + rng.next_below(cfg.distinct_values - 1)]);
    }

    // Fisher-Yates so target positions are spread deterministically.
    for (std::size_t i = values.size() - 1; i > 0; --i) {
        std::swap(values[i], values[rng.next_below(i + 1)]);
    }

    GeneratedExperiment out;
    out.target_values = {target_value};
    out.data.items.reserve(cfg.items);
    for (std::uint64_t i = 0; i < cfg.items; ++i) {
        out.data.items.push_back({i, values[i]});
    }
    return out;
}

ExperimentConfig preset_config(Preset preset) {
    switch (preset) {
    case Preset::Exp1:
        return ExperimentConfig{15, 5, 11, 1};
    case Preset::Exp2:
        return ExperimentConfig{40, 15, 16, 2};
    case Preset::Exp3:
        return ExperimentConfig{80, 20, 26, 3};
    }
    throw std::invalid_argument("unknown preset");
}

GeneratedExperiment preset_dataset(Preset preset) {
    const ExperimentConfig cfg = preset_config(preset);
    GeneratedExperiment out = generate_dataset(cfg);

    // The presets promise specific register widths; verify at generation time.
    const QubitWidths widths = compute_qubits(update_values(out.data, out.target_values));
    const QubitWidths expected = preset == Preset::Exp1   ? QubitWidths{4, 4}
                                 : preset == Preset::Exp2 ? QubitWidths{6, 4}
                                                          : QubitWidths{7, 5};
    if (!(widths == expected)) {
        throw std::logic_error("preset dataset does not realize the promised qubit widths");
    }
    return out;
}

std::optional<Preset> preset_from_name(const std::string &name) {
    if (name == "exp1") {
        return Preset::Exp1;
    }
    if (name == "exp2") {
        return Preset::Exp2;
    }
    if (name == "exp3") {
        return Preset::Exp3;
    }
    return std::nullopt;
}

std::string preset_name(Preset preset) {
    switch (preset) {
    case Preset::Exp1:
        return "exp1";
    case Preset::Exp2:
        return "exp2";
    case Preset::Exp3:
        return "exp3";
    }
    return "unknown";
}

} // namespace qsearch
