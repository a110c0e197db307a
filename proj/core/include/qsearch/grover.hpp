#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsearch/statevector.hpp"

namespace qsearch {

/// Marked-state oracle over an n-qubit register.
struct Oracle {
    int num_qubits = 0;
    std::set<std::string> marked;

    /// 0/1 indicator over the 2^n basis states, 1 exactly at marked positions.
    std::vector<int> indicator() const;
    std::vector<std::size_t> marked_indices() const;

    /// Dense diagonal form (+1 / -1) of the phase action; test-sized only.
    GateMatrix phase_matrix() const;
};

Oracle build_oracle(const std::set<std::string> &marked, int num_qubits);

/// One reflection about the uniform superposition, applied as an O(2^n)
/// inversion about the mean amplitude.
Statevector diffusion(Statevector s);

struct SampleSpec {
    std::uint64_t shots = 24000;
    std::uint64_t seed = 0;
};

struct GroverRun {
    int num_qubits = 0;
    int invocations = 0;
    ProbabilityMap result;
    std::optional<std::uint64_t> shots_used;
};

/// Runs k invocations of (phase flip; diffusion) from the uniform
/// superposition. Exact mode reports |amplitude|^2 over every basis state;
/// sampled mode reports empirical frequencies over the observed states.
GroverRun grover_run(const Oracle &oracle, int invocations,
                     std::optional<SampleSpec> sampling = std::nullopt);

/// floor(pi / (4 asin(sqrt(M/N)))), clamped to at least 1. N must be a power
/// of two and M < N/2; at M >= N/2 the two-ray geometry degenerates.
int optimal_invocations(std::uint64_t search_space, std::uint64_t marked_count);

struct TwoLevelProbability {
    double target = 0.0;
    double nontarget = 0.0;
};

/// Per-state probabilities after k invocations from the reflection geometry:
/// sin^2((2k+1)theta)/M and cos^2((2k+1)theta)/(N-M) with theta = asin sqrt(M/N).
TwoLevelProbability closed_form_probability(std::uint64_t search_space,
                                            std::uint64_t marked_count, int invocations);

} // namespace qsearch
