#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "neurotop/bits.hpp"
#include "neurotop/errors.hpp"

namespace neurotop {

/// Hard cap on word length: supports live in a single 64-bit mask.
inline constexpr int kMaxLength = 63;

/// Weight cap for operations that enumerate every subset of a support.
inline constexpr int kMaxEnumerationBits = 24;

/**
 * A binary word of fixed positive length n.
 *
 * Bit i-1 of the mask stores position i, so mask() doubles as the support:
 * the set of 1-based positions holding a 1.  The all-zero word has empty
 * support.
 */
class Codeword {
public:
    Codeword(std::uint64_t mask, int length);

    /// Builds a word from a "0101" string.
    static Codeword from_string(std::string_view text);

    std::uint64_t mask() const noexcept { return mask_; }
    int length() const noexcept { return length_; }

    /// Value at 1-based position.
    bool bit(int position) const;

    int weight() const noexcept { return popcount(mask_); }

    /// Ascending 1-based support indices.
    std::vector<int> support() const { return mask_to_indices(mask_); }

    std::string to_string() const;

    friend bool operator==(const Codeword&, const Codeword&) noexcept = default;

    /// Lexicographic order on the bit string; matches string order for
    /// words of equal length.
    friend bool operator<(const Codeword& a, const Codeword& b) noexcept;

private:
    std::uint64_t mask_;
    int length_;
};

/**
 * A finite set of codewords of common length n.  Words are deduplicated
 * and kept in lexicographic order; word and support determine each other,
 * so membership queries accept either.
 */
class Code {
public:
    /// An empty code of the given length (no words).
    explicit Code(int length);

    Code(int length, std::vector<Codeword> words);

    int length() const noexcept { return length_; }
    bool empty() const noexcept { return words_.empty(); }
    std::size_t size() const noexcept { return words_.size(); }

    /// Words in lexicographic order.
    const std::vector<Codeword>& words() const noexcept { return words_; }

    bool contains(const Codeword& word) const;
    bool contains_support(std::uint64_t support) const;

    /// Canonical text: lexicographically sorted words, one per line,
    /// trailing newline.
    std::string render() const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    int length_;
    std::vector<Codeword> words_;  // sorted, unique
};

/**
 * Reads a code from text: one word per line as a '0'/'1' string, blank
 * lines and lines starting with '#' ignored, duplicate lines collapsed.
 * Fails with mixed_length / bad_character / empty_code, each carrying the
 * offending 1-based line number.
 */
Code parse_code(std::istream& in);
Code parse_code(std::string_view text);

/// True iff every word's every sub-support is present.
bool is_simplicial(const Code& code);

/// The smallest simplicial code containing the input: all words whose
/// support lies under some input support.  Enumerates subsets, so words
/// of weight above kMaxEnumerationBits are rejected.
Code simplicial_completion(const Code& code);

}  // namespace neurotop
