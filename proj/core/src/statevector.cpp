#include "qsearch/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsearch/bits.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

double ProbabilityMap::sum() const {
    double total = 0.0;
    for (const auto &[_, p] : entries) {
        total += p;
    }
    return total;
}

double ProbabilityMap::mean() const {
    if (entries.empty()) {
        throw std::invalid_argument("mean of an empty probability map");
    }
    return sum() / static_cast<double>(entries.size());
}

ProbabilityMap ShotCounts::frequencies() const {
    ProbabilityMap out;
    for (const auto &[state, count] : counts) {
        out.entries[state] = static_cast<double>(count) / static_cast<double>(shots);
    }
    return out;
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                            "], got " + std::to_string(num_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector Statevector::uniform_superposition(int num_qubits) {
    Statevector s(num_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(s.size()));
    std::fill(s.amplitudes_.begin(), s.amplitudes_.end(), Complex{amp, 0.0});
    return s;
}

double Statevector::norm() const {
    double total = 0.0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void Statevector::apply_gate(const GateMatrix &g, std::span<const int> qubits) {
    const int k = static_cast<int>(qubits.size());
    if (k < 1 || g.dim() != (std::size_t{1} << k)) {
        throw std::invalid_argument("gate dimension does not match target qubit count");
    }
    std::uint64_t target_mask = 0;
    std::vector<std::uint64_t> bit_masks(qubits.size());
    for (int i = 0; i < k; ++i) {
        const int q = qubits[static_cast<std::size_t>(i)];
        if (q < 0 || q >= num_qubits_) {
            throw std::invalid_argument("target qubit out of range");
        }
        const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - q);
        if (target_mask & mask) {
            throw std::invalid_argument("duplicate target qubit");
        }
        target_mask |= mask;
        bit_masks[static_cast<std::size_t>(i)] = mask;
    }

    const std::size_t local_dim = g.dim();
    std::vector<Complex> scratch(local_dim);
    const std::uint64_t full = size();
    for (std::uint64_t base = 0; base < full; ++base) {
        if (base & target_mask) {
            continue; // visit each gather group once, at its all-zero member
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            std::uint64_t idx = base;
            for (int i = 0; i < k; ++i) {
                if ((l >> i) & 1U) {
                    idx |= bit_masks[static_cast<std::size_t>(i)];
                }
            }
            scratch[l] = amplitudes_[idx];
        }
        for (std::size_t r = 0; r < local_dim; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < local_dim; ++c) {
                acc += g.at(r, c) * scratch[c];
            }
            std::uint64_t idx = base;
            for (int i = 0; i < k; ++i) {
                if ((r >> i) & 1U) {
                    idx |= bit_masks[static_cast<std::size_t>(i)];
                }
            }
            amplitudes_[idx] = acc;
        }
    }
}

void Statevector::phase_flip(const std::vector<std::string> &marked) {
    std::vector<std::size_t> indices;
    indices.reserve(marked.size());
    for (const std::string &bits : marked) {
        if (static_cast<int>(bits.size()) != num_qubits_) {
            throw std::invalid_argument("marked bitstring length does not match register");
        }
        indices.push_back(from_bitstring(bits));
    }
    phase_flip_indices(indices);
}

void Statevector::phase_flip_indices(std::span<const std::size_t> marked) {
    for (std::size_t idx : marked) {
        if (idx >= size()) {
            throw std::invalid_argument("marked basis index out of range");
        }
        amplitudes_[idx] = -amplitudes_[idx];
    }
}

void Statevector::invert_about_mean() {
    Complex mean{0.0, 0.0};
    for (const Complex &a : amplitudes_) {
        mean += a;
    }
    mean /= static_cast<double>(size());
    const Complex twice = 2.0 * mean;
    for (Complex &a : amplitudes_) {
        a = twice - a;
    }
}

ProbabilityMap Statevector::probabilities() const {
    ProbabilityMap out;
    auto hint = out.entries.end();
    for (std::size_t i = 0; i < size(); ++i) {
        hint = out.entries.emplace_hint(hint, to_bitstring(i, num_qubits_), std::norm(amplitudes_[i]));
    }
    return out;
}

ShotCounts sample(const Statevector &s, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    std::vector<double> cumulative(s.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += std::norm(s.amplitude(i));
        cumulative[i] = acc;
    }
    cumulative.back() = 1.0; // guard against rounding in the tail

    Xoshiro256 rng(seed);
    std::vector<std::uint64_t> counts(s.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.next_double();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        counts[static_cast<std::size_t>(it - cumulative.begin())]++;
    }

    ShotCounts out;
    out.shots = shots;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] > 0) {
            out.counts.emplace(to_bitstring(i, s.num_qubits()), counts[i]);
        }
    }
    return out;
}

} // namespace qsearch
