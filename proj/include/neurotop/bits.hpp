#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace neurotop {

/// Index sets over {1,...,n} are stored as 64-bit masks with bit i-1
/// standing for index i.

inline int popcount(std::uint64_t mask) noexcept {
    return std::popcount(mask);
}

/// Ascending 1-based indices of the set bits.
std::vector<int> mask_to_indices(std::uint64_t mask);

/// Mask for a list of 1-based indices (no range checking beyond 64 bits).
std::uint64_t indices_to_mask(const std::vector<int>& indices);

/// Compares two index sets as ascending sequences, reading exhausted
/// positions as +infinity: {1,2} orders before {1}, and {1} before {2}.
bool set_lex_less(std::uint64_t a, std::uint64_t b) noexcept;

/// (cardinality, set_lex) order; the order used for faces and facets.
bool size_lex_less(std::uint64_t a, std::uint64_t b) noexcept;

/// "1,2,5" for {1,2,5}; the empty set renders "{}".
std::string render_index_set(std::uint64_t mask);

}  // namespace neurotop
