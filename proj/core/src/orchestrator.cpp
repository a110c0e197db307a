#include "qsearch/orchestrator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qsearch/encoding.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/filter.hpp"
#include "qsearch/grover.hpp"

namespace qsearch {

namespace {

std::optional<SampleSpec> sampling_of(const RunOptions &options) {
    if (options.exact) {
        return std::nullopt;
    }
    return SampleSpec{options.shots, options.sample_seed};
}

std::map<std::uint64_t, std::uint64_t> index_view(const Dataset &data) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const DataPoint &p : data.items) {
        if (!out.emplace(p.index, p.value).second) {
            throw std::invalid_argument("dataset indexes must be unique");
        }
    }
    return out;
}

std::set<std::uint64_t> truth_indexes(const Dataset &data,
                                      const std::vector<std::uint64_t> &targets) {
    std::set<std::uint64_t> out;
    for (const DataPoint &p : data.items) {
        if (std::find(targets.begin(), targets.end(), p.value) != targets.end()) {
            out.insert(p.index);
        }
    }
    return out;
}

void validate_inputs(const Dataset &data, const std::vector<std::uint64_t> &targets,
                     const std::map<std::uint64_t, std::uint64_t> &by_index) {
    if (data.empty()) {
        throw std::invalid_argument("dataset must be non-empty");
    }
    if (targets.empty()) {
        throw std::invalid_argument("target list must be non-empty");
    }
    for (std::uint64_t t : targets) {
        const bool present = std::any_of(data.items.begin(), data.items.end(),
                                         [&](const DataPoint &p) { return p.value == t; });
        if (!present) {
            throw std::invalid_argument("target value " + std::to_string(t) +
                                        " does not occur in the dataset");
        }
    }
    (void)by_index; // uniqueness already enforced while building the view
}

/// Survivor probabilities restricted to the current universe, keeping only
/// states the filter kept. Sampled runs may miss unobserved universe states.
ProbabilityMap restrict_to_universe(const ProbabilityMap &measured,
                                    const std::vector<std::string> &universe,
                                    const std::set<std::string> &kept) {
    ProbabilityMap out;
    for (const std::string &bits : universe) {
        if (!kept.contains(bits)) {
            continue;
        }
        const auto it = measured.entries.find(bits);
        if (it != measured.entries.end()) {
            out.entries.emplace(bits, it->second);
        }
    }
    return out;
}

Dataset finalize_pairs(const Dataset &survivors,
                       const std::map<std::uint64_t, std::uint64_t> &original_by_index) {
    Dataset out;
    out.items.reserve(survivors.size());
    for (const DataPoint &p : survivors.items) {
        const auto it = original_by_index.find(p.index);
        if (it == original_by_index.end()) {
            throw InconsistencyError("surviving index " + std::to_string(p.index) +
                                     " is not part of the client dataset");
        }
        out.items.push_back({p.index, it->second});
    }
    return out;
}

SearchTrace run_iterative(Algorithm algo, const Dataset &data,
                          const std::vector<std::uint64_t> &targets, const RunOptions &options) {
    const auto original_by_index = index_view(data);
    validate_inputs(data, targets, original_by_index);
    if (options.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }

    const std::set<std::uint64_t> truth = truth_indexes(data, targets);
    const std::size_t target_id_count = targets.size();

    // Canonical target ids after the first value compression; re-seeding with
    // 0..n-1 keeps compression a fixed point on converged data.
    std::vector<std::uint64_t> canonical_targets(target_id_count);
    std::iota(canonical_targets.begin(), canonical_targets.end(), 0);

    SearchTrace trace;
    trace.algorithm = algo;

    Dataset current = update_values(data, targets);
    std::optional<std::map<std::uint64_t, std::uint64_t>> previous;

    for (int iteration = 1;; ++iteration) {
        Dataset work;
        std::optional<IndexMapping> mapping;
        if (iteration == 1) {
            work = current; // first pass keeps the client's own indexes
        } else {
            mapping = update_indexes(current);
            work.items.reserve(current.size());
            for (std::uint64_t fresh = 0; fresh < current.size(); ++fresh) {
                work.items.push_back({fresh, current.items[fresh].value});
            }
            work = update_values(work, canonical_targets);
        }

        const EncodedProblem encoded = generate_binary_pairs(work, target_id_count);
        const int invocations = invocation_schedule(algo, iteration);
        const GroverRun run = grover_run(build_oracle(encoded.marked, encoded.widths.total()),
                                         invocations, sampling_of(options));

        std::set<std::string> kept;
        if (algo == Algorithm::Resaqus) {
            kept = filter(run.result, options.filter_max_passes);
        } else {
            const double threshold = options.iqucs_multiplier * run.result.mean();
            for (const auto &[bits, p] : run.result.entries) {
                if (p > threshold) {
                    kept.insert(bits);
                }
            }
        }

        IterationRecord record;
        record.iteration = iteration;
        record.qubits = encoded.widths.total();
        record.invocations = invocations;
        record.probabilities = run.result;
        record.index_bits = encoded.widths.index_bits;
        record.value_bits = encoded.widths.value_bits;
        record.universe = encoded.universe;
        record.marked = encoded.marked;

        const ProbabilityMap survivor_probs =
            restrict_to_universe(run.result, encoded.universe, kept);
        if (survivor_probs.empty()) {
            trace.records.push_back(std::move(record));
            trace.cqc = cqc(trace);
            trace.converged = false;
            trace.error = "empty-result";
            throw EmptyResultError("iteration " + std::to_string(iteration) +
                                       " filtered out every remaining data point",
                                   trace);
        }

        Dataset survivors = decode(survivor_probs, encoded.widths);
        if (iteration > 1) {
            survivors = maintain_indexes(survivors, *mapping);
        }
        record.survivors = survivors;
        trace.records.push_back(std::move(record));

        const auto survivor_map = survivors.as_map();
        if (previous && *previous == survivor_map) {
            trace.converged = true;
            current = survivors;
            break;
        }
        previous = survivor_map;
        current = survivors;
        if (iteration == options.max_iterations) {
            trace.converged = false;
            break;
        }
    }

    trace.final_pairs = finalize_pairs(current, original_by_index);
    trace.cqc = cqc(trace);
    trace.accuracy = accuracy(trace, truth);
    return trace;
}

} // namespace

std::string algorithm_name(Algorithm algo) {
    switch (algo) {
    case Algorithm::GSearch:
        return "gsearch";
    case Algorithm::IQuCS:
        return "iqucs";
    case Algorithm::Resaqus:
        return "resaqus";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(const std::string &name) {
    if (name == "gsearch") {
        return Algorithm::GSearch;
    }
    if (name == "iqucs") {
        return Algorithm::IQuCS;
    }
    if (name == "resaqus") {
        return Algorithm::Resaqus;
    }
    return std::nullopt;
}

int invocation_schedule(Algorithm algo, int iteration, std::uint64_t search_space,
                        std::uint64_t marked_count) {
    if (iteration < 1) {
        throw std::invalid_argument("iteration numbering starts at 1");
    }
    switch (algo) {
    case Algorithm::Resaqus:
        return 1;
    case Algorithm::IQuCS:
        return iteration % 2 == 1 ? 1 : 2;
    case Algorithm::GSearch:
        if (search_space == 0) {
            throw std::invalid_argument("single-iteration schedule needs the (N, M) instance");
        }
        return optimal_invocations(search_space, marked_count);
    }
    throw std::invalid_argument("unknown algorithm");
}

std::uint64_t cqc(const SearchTrace &trace) {
    if (trace.records.empty()) {
        throw std::invalid_argument("trace has no iteration records");
    }
    std::uint64_t total = 0;
    for (const IterationRecord &record : trace.records) {
        total += static_cast<std::uint64_t>(record.invocations) *
                 static_cast<std::uint64_t>(record.qubits);
    }
    return total;
}

double accuracy(const SearchTrace &trace, const std::set<std::uint64_t> &truth_indexes) {
    if (truth_indexes.empty()) {
        throw std::invalid_argument("truth set must be non-empty");
    }
    std::size_t hits = 0;
    for (const DataPoint &p : trace.final_pairs.items) {
        if (truth_indexes.contains(p.index)) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(truth_indexes.size());
}

SearchTrace run_resaqus(const Dataset &data, const std::vector<std::uint64_t> &targets,
                        const RunOptions &options) {
    return run_iterative(Algorithm::Resaqus, data, targets, options);
}

SearchTrace run_iqucs(const Dataset &data, const std::vector<std::uint64_t> &targets,
                      const RunOptions &options) {
    return run_iterative(Algorithm::IQuCS, data, targets, options);
}

SearchTrace run_gsearch(const Dataset &data, const std::vector<std::uint64_t> &targets,
                        const RunOptions &options) {
    const auto original_by_index = index_view(data);
    validate_inputs(data, targets, original_by_index);
    if (options.gsearch_threshold <= 0.0 || options.gsearch_threshold >= 1.0) {
        throw std::invalid_argument("reporting threshold must lie in (0, 1)");
    }

    const std::set<std::uint64_t> truth = truth_indexes(data, targets);
    const Dataset compressed = update_values(data, targets);
    const EncodedProblem encoded = generate_binary_pairs(compressed, targets.size());

    const std::uint64_t search_space = std::uint64_t{1} << encoded.widths.total();
    const int optimal = invocation_schedule(Algorithm::GSearch, 1, search_space,
                                            encoded.marked.size());
    const int invocations = options.gsearch_invocations.value_or(optimal);
    if (invocations < 1 || invocations > optimal) {
        throw std::invalid_argument("invocation override must lie in [1, optimal]");
    }

    const GroverRun run = grover_run(build_oracle(encoded.marked, encoded.widths.total()),
                                     invocations, sampling_of(options));

    std::set<std::string> kept;
    for (const auto &[bits, p] : run.result.entries) {
        if (p >= options.gsearch_threshold) {
            kept.insert(bits);
        }
    }
    const Dataset survivors =
        decode(restrict_to_universe(run.result, encoded.universe, kept), encoded.widths);

    SearchTrace trace;
    trace.algorithm = Algorithm::GSearch;
    IterationRecord record;
    record.iteration = 1;
    record.qubits = encoded.widths.total();
    record.invocations = invocations;
    record.survivors = survivors;
    record.probabilities = run.result;
    record.index_bits = encoded.widths.index_bits;
    record.value_bits = encoded.widths.value_bits;
    record.universe = encoded.universe;
    record.marked = encoded.marked;
    trace.records.push_back(std::move(record));
    trace.converged = true;
    trace.final_pairs = finalize_pairs(survivors, original_by_index);
    trace.cqc = cqc(trace);
    trace.accuracy = accuracy(trace, truth);
    return trace;
}

} // namespace qsearch
