#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neurotop/code.hpp"

namespace neurotop {

/// Largest ground-set size a cover may have.
inline constexpr int kMaxGroundSize = 1 << 24;

/**
 * A discretized stimulus space: points {1,...,M} together with an ordered
 * family of subsets U_1,...,U_n.  Sets may be empty and the family need
 * not cover the space; uncovered points realize the all-zero codeword.
 */
class Cover {
public:
    Cover(int ground_size, std::vector<std::vector<int>> sets);

    int ground_size() const noexcept { return ground_size_; }
    int set_count() const noexcept { return static_cast<int>(sets_.size()); }

    /// Point lists, each strictly ascending.
    const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }

private:
    int ground_size_;
    std::vector<std::vector<int>> sets_;
};

/// The code of the covering: one word per distinct membership pattern,
/// where pattern(p) = { i : p in U_i }.  A point in no set contributes
/// the all-zero word.
Code code_of_cover(const Cover& cover);

/// Atoms of a cover: each realized codeword mapped to the points that
/// share its membership pattern.  The point sets partition {1,...,M}.
class Atlas {
public:
    using Map = std::map<Codeword, std::vector<int>>;

    explicit Atlas(Map entries) : entries_(std::move(entries)) {}

    const Map& entries() const noexcept { return entries_; }

    /// One atom per line: "<word>: <points ascending>".
    std::string render() const;

private:
    Map entries_;
};

Atlas atoms(const Cover& cover);

/// Closed integer interval [lo, hi].
struct AxisRange {
    long long lo;
    long long hi;
};

/**
 * A cover of a dim-dimensional integer grid by axis-aligned boxes.  The
 * ground set is every grid point inside the extent, numbered row-major
 * (last axis fastest) starting from 1; set i holds the points inside
 * box i.  Boxes are convex, so these fixtures meet the good-cover
 * hypotheses at grid resolution.
 */
Cover grid_box_cover(int dim, const std::vector<std::vector<AxisRange>>& boxes,
                     const std::vector<AxisRange>& extent);

/// Arc on a cyclic grid: starts at `start` (grid units, taken mod the
/// grid size) and spans `length` consecutive points.
struct Arc {
    long long start;
    long long length;
};

/// A cover of the cyclic grid Z/G (stored as points {1,...,G}) by arcs.
Cover circle_arc_cover(int grid, const std::vector<Arc>& arcs);

struct NerveCheckReport {
    bool equal;
    std::optional<std::uint64_t> witness;  // a face in the symmetric difference
};

/// Builds the nerve and the code complex along independent routes and
/// compares their face families.  Equality holds for every cover; a
/// mismatch signals an implementation bug, witnessed by a face present
/// on only one side.
NerveCheckReport nerve_equals_delta(const Cover& cover);

/**
 * Reads a cover from text.  Format: a "points M sets N" header, then N
 * positional set lines, line i listing the ascending 1-based points of
 * U_i separated by spaces.  Within the positional block a blank line is
 * an empty set; elsewhere blank lines are ignored.  '#' lines are
 * comments throughout.
 */
Cover parse_cover(std::istream& in);
Cover parse_cover(std::string_view text);

/// Canonical cover text: header plus one line per set.
std::string render_cover(const Cover& cover);

}  // namespace neurotop
