#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsearch/gates.hpp"

namespace qsearch {

/// Basis-state label -> probability. Lexicographic key order equals numeric
/// basis order, so iteration is deterministic.
struct ProbabilityMap {
    std::map<std::string, double> entries;

    double sum() const;
    double mean() const;
    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

struct ShotCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;

    ProbabilityMap frequencies() const;
};

/**
 * Dense 2^n-amplitude simulator state.
 *
 * Qubit 0 is the most significant bit of the basis label, so basis index b
 * corresponds to the bitstring read left to right. Gate application embeds a
 * small unitary into the full register: `qubits[i]` supplies bit i of the
 * gate's local index, counting from the least significant bit (the ordering
 * the catalog's controlled-gate matrices are written in).
 */
class Statevector {
  public:
    static constexpr int kMaxQubits = 24;

    /// |0...0> on n qubits.
    explicit Statevector(int num_qubits);

    static Statevector uniform_superposition(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex &amplitude(std::size_t basis) { return amplitudes_[basis]; }
    const Complex &amplitude(std::size_t basis) const { return amplitudes_[basis]; }

    double norm() const;

    void apply_gate(const GateMatrix &g, std::span<const int> qubits);

    /// Negates the amplitudes of the given basis states; an involution.
    void phase_flip(const std::vector<std::string> &marked);
    void phase_flip_indices(std::span<const std::size_t> marked);

    /// Reflects every amplitude about the mean amplitude (2m - a).
    void invert_about_mean();

    ProbabilityMap probabilities() const;

  private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Multinomial draw from probabilities(s): `shots` inverse-CDF samples from a
/// Xoshiro256 stream seeded with `seed`. Identical inputs give identical
/// counts on every platform.
ShotCounts sample(const Statevector &s, std::uint64_t shots, std::uint64_t seed);

} // namespace qsearch
