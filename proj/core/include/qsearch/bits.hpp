#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsearch {

// Basis-state labels are fixed-width binary strings with qubit 0 as the
// most significant character, so lexicographic order equals numeric order.

inline std::string to_bitstring(std::uint64_t value, int width) {
    if (width <= 0 || width > 64) {
        throw std::invalid_argument("bitstring width must be in [1, 64]");
    }
    if (width < 64 && (value >> width) != 0) {
        throw std::invalid_argument("value " + std::to_string(value) +
                                    " does not fit in " + std::to_string(width) + " bits");
    }
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((value >> (width - 1 - i)) & 1ULL) {
            out[static_cast<std::size_t>(i)] = '1';
        }
    }
    return out;
}

inline std::uint64_t from_bitstring(const std::string &bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bitstring length must be in [1, 64]");
    }
    std::uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("malformed bitstring: " + bits);
        }
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

/// Smallest register that can address `count` distinct states, never zero-width.
inline int bits_for_count(std::uint64_t count) {
    int bits = 0;
    while ((1ULL << bits) < count) {
        ++bits;
    }
    return bits < 1 ? 1 : bits;
}

} // namespace qsearch
