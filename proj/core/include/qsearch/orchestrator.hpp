#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsearch/data.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

enum class Algorithm { GSearch, IQuCS, Resaqus };

std::string algorithm_name(Algorithm algo);
std::optional<Algorithm> algorithm_from_name(const std::string &name);

struct IterationRecord {
    int iteration = 0;   ///< j, starting at 1
    int qubits = 0;      ///< Q_j
    int invocations = 0; ///< C_j
    /// Surviving (original index -> current value id) pairs. Empty only on
    /// the final record of a run that aborted with an empty filter result.
    Dataset survivors;
    ProbabilityMap probabilities; ///< snapshot measured this iteration

    // Encoding metadata for downstream reporting; not serialized.
    int index_bits = 0;
    int value_bits = 0;
    std::vector<std::string> universe;
    std::set<std::string> marked;
};

struct SearchTrace {
    Algorithm algorithm = Algorithm::Resaqus;
    std::vector<IterationRecord> records;
    std::uint64_t cqc = 0;
    Dataset final_pairs; ///< original (index, value) pairs reported to the client
    double accuracy = 0.0;
    bool converged = false;
    std::optional<std::string> error;
};

/// Every data point was filtered out; carries the consumption so far.
class EmptyResultError : public std::runtime_error {
  public:
    EmptyResultError(const std::string &what, SearchTrace partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}

    const SearchTrace &partial_trace() const { return partial_; }

  private:
    SearchTrace partial_;
};

struct RunOptions {
    bool exact = true;              ///< exact probabilities vs. sampled frequencies
    std::uint64_t shots = 24000;    ///< sampled mode only
    std::uint64_t sample_seed = 0;  ///< sampled mode only
    int max_iterations = 10;        ///< J
    double gsearch_threshold = 0.01;
    double iqucs_multiplier = 1.0;  ///< threshold = multiplier * mean probability
    std::optional<int> gsearch_invocations; ///< diagnostic override below the optimum
    int filter_max_passes = 100;
};

/// Per-iteration invocation budget: always 1 for the clustering search, the
/// 1/2 parity rule for the threshold baseline. The single-iteration baseline
/// takes the optimal count for its (N, M) instance.
int invocation_schedule(Algorithm algo, int iteration, std::uint64_t search_space = 0,
                        std::uint64_t marked_count = 0);

std::uint64_t cqc(const SearchTrace &trace);

/// Fraction of the true target indexes present in the trace's final report.
double accuracy(const SearchTrace &trace, const std::set<std::uint64_t> &truth_indexes);

/// Iterative search with self-adaptive two-centroid filtering; one invocation
/// per iteration, re-encoding the surviving pairs between iterations.
SearchTrace run_resaqus(const Dataset &data, const std::vector<std::uint64_t> &targets,
                        const RunOptions &options = {});

/// Iterative baseline keeping states strictly above multiplier * mean
/// probability; throws EmptyResultError when an iteration filters everything.
SearchTrace run_iqucs(const Dataset &data, const std::vector<std::uint64_t> &targets,
                      const RunOptions &options = {});

/// Single-iteration baseline at the optimal invocation count with a fixed
/// reporting threshold.
SearchTrace run_gsearch(const Dataset &data, const std::vector<std::uint64_t> &targets,
                        const RunOptions &options = {});

} // namespace qsearch
