#pragma once

#include <stdexcept>
#include <string>

namespace neurotop {

/// Failure categories shared across the library.  The CLI maps these to
/// process exit codes: parse failures exit 1, contract violations and
/// capacity limits exit 2, internal invariant failures exit 3.
enum class errc {
    // input text could not be parsed
    empty_code,
    mixed_length,
    bad_character,
    bad_cover_file,
    // contract violations and capacity limits
    bad_argument,
    capacity_exceeded,
    length_mismatch,
    zero_sets,
    empty_extent,
    box_out_of_extent,
    bad_arc,
    disconnected,
    missing_basepoint,
    missing_vertex,
    no_path,
    // invariant failures that signal a bug
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message, int line = 0)
        : std::runtime_error(message), code_(code), line_(line) {}

    errc code() const noexcept { return code_; }

    /// 1-based line number of the offending input line, 0 when not tied to one.
    int line() const noexcept { return line_; }

private:
    errc code_;
    int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& message, int line = 0) {
    throw Error(code, message, line);
}

inline bool is_parse_error(errc code) noexcept {
    switch (code) {
    case errc::empty_code:
    case errc::mixed_length:
    case errc::bad_character:
    case errc::bad_cover_file:
        return true;
    default:
        return false;
    }
}

}  // namespace neurotop
