#include "qsearch/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsearch/bits.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

std::vector<int> Oracle::indicator() const {
    std::vector<int> out(std::size_t{1} << num_qubits, 0);
    for (const std::string &bits : marked) {
        out[from_bitstring(bits)] = 1;
    }
    return out;
}

std::vector<std::size_t> Oracle::marked_indices() const {
    std::vector<std::size_t> out;
    out.reserve(marked.size());
    for (const std::string &bits : marked) {
        out.push_back(from_bitstring(bits));
    }
    return out;
}

GateMatrix Oracle::phase_matrix() const {
    GateMatrix m = GateMatrix::identity(std::size_t{1} << num_qubits);
    for (std::size_t idx : marked_indices()) {
        m.at(idx, idx) = -1.0;
    }
    return m;
}

Oracle build_oracle(const std::set<std::string> &marked, int num_qubits) {
    if (num_qubits < 1 || num_qubits > Statevector::kMaxQubits) {
        throw CapacityError("oracle register size out of range");
    }
    for (const std::string &bits : marked) {
        if (static_cast<int>(bits.size()) != num_qubits) {
            throw std::invalid_argument("marked bitstring '" + bits + "' does not have length " +
                                        std::to_string(num_qubits));
        }
        from_bitstring(bits); // validates characters
    }
    return Oracle{num_qubits, marked};
}

Statevector diffusion(Statevector s) {
    s.invert_about_mean();
    return s;
}

GroverRun grover_run(const Oracle &oracle, int invocations, std::optional<SampleSpec> sampling) {
    if (invocations < 0) {
        throw std::invalid_argument("invocation count must be >= 0");
    }
    Statevector state = Statevector::uniform_superposition(oracle.num_qubits);
    const std::vector<std::size_t> marked = oracle.marked_indices();
    for (int i = 0; i < invocations; ++i) {
        state.phase_flip_indices(marked);
        state.invert_about_mean();
    }

    GroverRun run;
    run.num_qubits = oracle.num_qubits;
    run.invocations = invocations;
    if (sampling) {
        const ShotCounts counts = sample(state, sampling->shots, sampling->seed);
        run.result = counts.frequencies();
        run.shots_used = sampling->shots;
    } else {
        run.result = state.probabilities();
    }
    return run;
}

int optimal_invocations(std::uint64_t search_space, std::uint64_t marked_count) {
    if (search_space == 0 || (search_space & (search_space - 1)) != 0) {
        throw std::invalid_argument("search space size must be a power of two");
    }
    if (marked_count < 1) {
        throw std::invalid_argument("marked count must be >= 1");
    }
    if (2 * marked_count >= search_space) {
        throw std::invalid_argument("marked count must be below half the search space");
    }
    const double theta =
        std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(search_space)));
    const int k = static_cast<int>(std::floor(std::numbers::pi / (4.0 * theta)));
    return k < 1 ? 1 : k;
}

TwoLevelProbability closed_form_probability(std::uint64_t search_space,
                                            std::uint64_t marked_count, int invocations) {
    if (marked_count < 1 || marked_count >= search_space) {
        throw std::invalid_argument("marked count must satisfy 1 <= M < N");
    }
    const double theta =
        std::asin(std::sqrt(static_cast<double>(marked_count) / static_cast<double>(search_space)));
    const double angle = (2.0 * invocations + 1.0) * theta;
    const double st = std::sin(angle);
    const double ct = std::cos(angle);
    return TwoLevelProbability{st * st / static_cast<double>(marked_count),
                               ct * ct / static_cast<double>(search_space - marked_count)};
}

} // namespace qsearch
