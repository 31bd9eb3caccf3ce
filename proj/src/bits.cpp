#include "neurotop/bits.hpp"

namespace neurotop {

std::vector<int> mask_to_indices(std::uint64_t mask) {
    std::vector<int> indices;
    indices.reserve(static_cast<std::size_t>(popcount(mask)));
    while (mask != 0) {
        indices.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return indices;
}

std::uint64_t indices_to_mask(const std::vector<int>& indices) {
    std::uint64_t mask = 0;
    for (int i : indices)
        mask |= std::uint64_t{1} << (i - 1);
    return mask;
}

bool set_lex_less(std::uint64_t a, std::uint64_t b) noexcept {
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a);
        const int ib = std::countr_zero(b);
        if (ia != ib)
            return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    // exhausted sets read as +infinity, so the longer one comes first
    return a != 0;
}

bool size_lex_less(std::uint64_t a, std::uint64_t b) noexcept {
    const int pa = popcount(a);
    const int pb = popcount(b);
    if (pa != pb)
        return pa < pb;
    return set_lex_less(a, b);
}

std::string render_index_set(std::uint64_t mask) {
    if (mask == 0)
        return "{}";
    std::string out;
    bool first = true;
    for (int i : mask_to_indices(mask)) {
        if (!first)
            out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out;
}

}  // namespace neurotop
