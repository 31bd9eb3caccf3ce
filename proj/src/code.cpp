#include "neurotop/code.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace neurotop {

Codeword::Codeword(std::uint64_t mask, int length) : mask_(mask), length_(length) {
    if (length <= 0)
        fail(errc::bad_argument, "codeword length must be positive");
    if (length > kMaxLength)
        fail(errc::capacity_exceeded,
             "codeword length " + std::to_string(length) + " exceeds capacity " +
                 std::to_string(kMaxLength));
    if (length < 64 && (mask >> length) != 0)
        fail(errc::bad_argument, "support mask has bits beyond the word length");
}

Codeword Codeword::from_string(std::string_view text) {
    if (text.empty())
        fail(errc::bad_argument, "empty codeword string");
    if (text.size() > static_cast<std::size_t>(kMaxLength))
        fail(errc::capacity_exceeded,
             "codeword length " + std::to_string(text.size()) + " exceeds capacity " +
                 std::to_string(kMaxLength));
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            mask |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            fail(errc::bad_character,
                 std::string("invalid character '") + text[i] + "' in codeword");
    }
    return Codeword(mask, static_cast<int>(text.size()));
}

bool Codeword::bit(int position) const {
    if (position < 1 || position > length_)
        fail(errc::bad_argument, "position " + std::to_string(position) + " out of range");
    return (mask_ >> (position - 1)) & 1;
}

std::string Codeword::to_string() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if ((mask_ >> i) & 1)
            out[static_cast<std::size_t>(i)] = '1';
    return out;
}

bool operator<(const Codeword& a, const Codeword& b) noexcept {
    if (a.length_ != b.length_)
        return a.length_ < b.length_;
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0)
        return false;
    // the word with a 0 at the first differing position is smaller
    return (b.mask_ >> std::countr_zero(diff)) & 1;
}

Code::Code(int length) : Code(length, {}) {}

Code::Code(int length, std::vector<Codeword> words) : length_(length), words_(std::move(words)) {
    if (length <= 0)
        fail(errc::bad_argument, "code length must be positive");
    if (length > kMaxLength)
        fail(errc::capacity_exceeded,
             "code length " + std::to_string(length) + " exceeds capacity " +
                 std::to_string(kMaxLength));
    for (const Codeword& w : words_)
        if (w.length() != length_)
            fail(errc::length_mismatch,
                 "codeword of length " + std::to_string(w.length()) +
                     " in code of length " + std::to_string(length_));
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(const Codeword& word) const {
    return word.length() == length_ && contains_support(word.mask());
}

bool Code::contains_support(std::uint64_t support) const {
    const Codeword probe(support, length_);
    return std::binary_search(words_.begin(), words_.end(), probe);
}

std::string Code::render() const {
    std::string out;
    out.reserve(words_.size() * (static_cast<std::size_t>(length_) + 1));
    for (const Codeword& w : words_) {
        out += w.to_string();
        out += '\n';
    }
    return out;
}

namespace {

// strips one trailing '\r' so CRLF input parses like LF input
std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Code parse_code(std::istream& in) {
    std::vector<Codeword> words;
    int length = 0;
    int first_data_line = 0;
    int line_number = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_number;
        const std::string_view line = chomp(raw);
        if (is_blank(line) || line.front() == '#')
            continue;
        for (char c : line)
            if (c != '0' && c != '1')
                fail(errc::bad_character,
                     "line " + std::to_string(line_number) + ": invalid character '" + c +
                         "' in codeword",
                     line_number);
        if (line.size() > static_cast<std::size_t>(kMaxLength))
            fail(errc::capacity_exceeded,
                 "line " + std::to_string(line_number) + ": word length " +
                     std::to_string(line.size()) + " exceeds capacity " +
                     std::to_string(kMaxLength),
                 line_number);
        if (words.empty()) {
            length = static_cast<int>(line.size());
            first_data_line = line_number;
        } else if (static_cast<int>(line.size()) != length) {
            fail(errc::mixed_length,
                 "line " + std::to_string(line_number) + ": word length " +
                     std::to_string(line.size()) + " differs from length " +
                     std::to_string(length) + " set at line " + std::to_string(first_data_line),
                 line_number);
        }
        words.push_back(Codeword::from_string(line));
    }
    if (words.empty())
        fail(errc::empty_code, "no data lines in code input");
    return Code(length, std::move(words));
}

Code parse_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_code(in);
}

bool is_simplicial(const Code& code) {
    // closure under removing a single support element implies full closure
    for (const Codeword& w : code.words()) {
        std::uint64_t rest = w.mask();
        while (rest != 0) {
            const std::uint64_t low = rest & (0 - rest);
            if (!code.contains_support(w.mask() ^ low))
                return false;
            rest ^= low;
        }
    }
    return true;
}

Code simplicial_completion(const Code& code) {
    std::unordered_set<std::uint64_t> supports;
    for (const Codeword& w : code.words()) {
        if (w.weight() > kMaxEnumerationBits)
            fail(errc::capacity_exceeded,
                 "support of weight " + std::to_string(w.weight()) +
                     " exceeds subset-enumeration capacity " +
                     std::to_string(kMaxEnumerationBits));
        std::uint64_t sub = w.mask();
        while (true) {
            supports.insert(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & w.mask();
        }
    }
    std::vector<Codeword> words;
    words.reserve(supports.size());
    for (std::uint64_t s : supports)
        words.emplace_back(s, code.length());
    return Code(code.length(), std::move(words));
}

}  // namespace neurotop
