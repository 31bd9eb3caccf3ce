#include "neurotop/cover.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "neurotop/complex.hpp"

namespace neurotop {

Cover::Cover(int ground_size, std::vector<std::vector<int>> sets)
    : ground_size_(ground_size), sets_(std::move(sets)) {
    if (ground_size < 1)
        fail(errc::bad_argument, "ground size must be positive");
    if (ground_size > kMaxGroundSize)
        fail(errc::capacity_exceeded,
             "ground size " + std::to_string(ground_size) + " exceeds capacity " +
                 std::to_string(kMaxGroundSize));
    if (sets_.size() > static_cast<std::size_t>(kMaxLength))
        fail(errc::capacity_exceeded,
             std::to_string(sets_.size()) + " sets exceed capacity " +
                 std::to_string(kMaxLength));
    for (std::vector<int>& set : sets_) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (int p : set)
            if (p < 1 || p > ground_size_)
                fail(errc::bad_argument,
                     "point " + std::to_string(p) + " outside ground set {1,...," +
                         std::to_string(ground_size_) + "}");
    }
}

namespace {

// membership pattern of every point, as support masks over the set indices
std::vector<std::uint64_t> point_patterns(const Cover& cover) {
    std::vector<std::uint64_t> patterns(static_cast<std::size_t>(cover.ground_size()), 0);
    for (int i = 0; i < cover.set_count(); ++i)
        for (int p : cover.sets()[static_cast<std::size_t>(i)])
            patterns[static_cast<std::size_t>(p - 1)] |= std::uint64_t{1} << i;
    return patterns;
}

void require_sets(const Cover& cover) {
    if (cover.set_count() == 0)
        fail(errc::zero_sets, "cover has no sets");
}

}  // namespace

Code code_of_cover(const Cover& cover) {
    require_sets(cover);
    std::vector<std::uint64_t> patterns = point_patterns(cover);
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    std::vector<Codeword> words;
    words.reserve(patterns.size());
    for (std::uint64_t pattern : patterns)
        words.emplace_back(pattern, cover.set_count());
    return Code(cover.set_count(), std::move(words));
}

Atlas atoms(const Cover& cover) {
    require_sets(cover);
    const std::vector<std::uint64_t> patterns = point_patterns(cover);
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (int p = 1; p <= cover.ground_size(); ++p)
        buckets[patterns[static_cast<std::size_t>(p - 1)]].push_back(p);
    Atlas::Map entries;
    for (auto& [pattern, points] : buckets)
        entries.emplace(Codeword(pattern, cover.set_count()), std::move(points));
    return Atlas(std::move(entries));
}

std::string Atlas::render() const {
    std::string out;
    for (const auto& [word, points] : entries_) {
        out += word.to_string();
        out += ':';
        for (int p : points) {
            out += ' ';
            out += std::to_string(p);
        }
        out += '\n';
    }
    return out;
}

Cover grid_box_cover(int dim, const std::vector<std::vector<AxisRange>>& boxes,
                     const std::vector<AxisRange>& extent) {
    if (dim < 1 || dim > 3)
        fail(errc::bad_argument, "grid dimension must be 1, 2, or 3");
    if (static_cast<int>(extent.size()) != dim)
        fail(errc::bad_argument, "extent must have one range per axis");
    long long point_count = 1;
    std::vector<long long> axis_size(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        const AxisRange& r = extent[static_cast<std::size_t>(a)];
        if (r.lo > r.hi)
            fail(errc::empty_extent, "extent axis " + std::to_string(a + 1) + " is empty");
        axis_size[static_cast<std::size_t>(a)] = r.hi - r.lo + 1;
        if (axis_size[static_cast<std::size_t>(a)] > kMaxGroundSize)
            fail(errc::capacity_exceeded, "extent axis " + std::to_string(a + 1) + " too large");
        point_count *= axis_size[static_cast<std::size_t>(a)];
        if (point_count > kMaxGroundSize)
            fail(errc::capacity_exceeded, "grid has more than " +
                                              std::to_string(kMaxGroundSize) + " points");
    }

    // row-major point number of a grid coordinate, 1-based
    auto index_of = [&](const std::vector<long long>& coord) {
        long long index = 0;
        for (int a = 0; a < dim; ++a)
            index = index * axis_size[static_cast<std::size_t>(a)] +
                    (coord[static_cast<std::size_t>(a)] - extent[static_cast<std::size_t>(a)].lo);
        return static_cast<int>(index + 1);
    };

    std::vector<std::vector<int>> sets;
    sets.reserve(boxes.size());
    for (std::size_t b = 0; b < boxes.size(); ++b) {
        const std::vector<AxisRange>& box = boxes[b];
        if (static_cast<int>(box.size()) != dim)
            fail(errc::bad_argument,
                 "box " + std::to_string(b + 1) + " must have one range per axis");
        for (int a = 0; a < dim; ++a) {
            const AxisRange& r = box[static_cast<std::size_t>(a)];
            if (r.lo > r.hi || r.lo < extent[static_cast<std::size_t>(a)].lo ||
                r.hi > extent[static_cast<std::size_t>(a)].hi)
                fail(errc::box_out_of_extent,
                     "box " + std::to_string(b + 1) + " does not fit inside the extent");
        }
        std::vector<int> points;
        std::vector<long long> coord(static_cast<std::size_t>(dim));
        for (int a = 0; a < dim; ++a)
            coord[static_cast<std::size_t>(a)] = box[static_cast<std::size_t>(a)].lo;
        while (true) {
            points.push_back(index_of(coord));
            int a = dim - 1;
            while (a >= 0 && ++coord[static_cast<std::size_t>(a)] >
                                 box[static_cast<std::size_t>(a)].hi) {
                coord[static_cast<std::size_t>(a)] = box[static_cast<std::size_t>(a)].lo;
                --a;
            }
            if (a < 0)
                break;
        }
        sets.push_back(std::move(points));
    }
    return Cover(static_cast<int>(point_count), std::move(sets));
}

Cover circle_arc_cover(int grid, const std::vector<Arc>& arcs) {
    if (grid < 3)
        fail(errc::bad_argument, "cyclic grid needs at least 3 points");
    std::vector<std::vector<int>> sets;
    sets.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& arc = arcs[i];
        if (arc.length <= 0 || arc.length >= grid)
            fail(errc::bad_arc, "arc " + std::to_string(i + 1) + " length " +
                                    std::to_string(arc.length) + " not in (0," +
                                    std::to_string(grid) + ")");
        const long long start = ((arc.start % grid) + grid) % grid;
        std::vector<int> points;
        points.reserve(static_cast<std::size_t>(arc.length));
        for (long long t = 0; t < arc.length; ++t)
            points.push_back(static_cast<int>((start + t) % grid) + 1);
        sets.push_back(std::move(points));
    }
    return Cover(grid, std::move(sets));
}

NerveCheckReport nerve_equals_delta(const Cover& cover) {
    require_sets(cover);
    const SimplicialComplex from_nerve = nerve(cover);
    const SimplicialComplex from_code = delta_complex(code_of_cover(cover));
    if (from_nerve.facets() == from_code.facets())
        return {true, std::nullopt};
    for (std::uint64_t f : from_nerve.facets())
        if (!from_code.is_face(f))
            return {false, f};
    for (std::uint64_t f : from_code.facets())
        if (!from_nerve.is_face(f))
            return {false, f};
    fail(errc::internal, "facet lists differ but no witness face found");
}

namespace {

std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Cover parse_cover(std::istream& in) {
    int line_number = 0;
    std::string raw;
    long long ground = -1;
    long long count = -1;

    while (std::getline(in, raw)) {
        ++line_number;
        const std::string_view line = chomp(raw);
        if (is_blank(line) || line.front() == '#')
            continue;
        std::istringstream header{std::string(line)};
        std::string kw_points, kw_sets;
        if (!(header >> kw_points >> ground >> kw_sets >> count) || kw_points != "points" ||
            kw_sets != "sets" || !(header >> std::ws).eof())
            fail(errc::bad_cover_file,
                 "line " + std::to_string(line_number) + ": expected header \"points M sets N\"",
                 line_number);
        break;
    }
    if (ground < 0)
        fail(errc::bad_cover_file, "missing \"points M sets N\" header");
    if (ground < 1 || ground > kMaxGroundSize)
        fail(errc::bad_cover_file,
             "line " + std::to_string(line_number) + ": point count out of range", line_number);
    if (count < 0 || count > kMaxLength)
        fail(errc::bad_cover_file,
             "line " + std::to_string(line_number) + ": set count out of range", line_number);

    // the next N non-comment lines are the sets; a blank line is an empty set
    std::vector<std::vector<int>> sets;
    while (static_cast<long long>(sets.size()) < count && std::getline(in, raw)) {
        ++line_number;
        const std::string_view line = chomp(raw);
        if (!is_blank(line) && line.front() == '#')
            continue;
        if (is_blank(line)) {
            sets.emplace_back();
            continue;
        }
        std::istringstream body{std::string(line)};
        std::vector<int> points;
        std::string token;
        while (body >> token) {
            int value = 0;
            try {
                std::size_t used = 0;
                value = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
            } catch (const std::exception&) {
                fail(errc::bad_cover_file,
                     "line " + std::to_string(line_number) + ": bad point index \"" + token +
                         "\"",
                     line_number);
            }
            if (value < 1 || value > ground)
                fail(errc::bad_cover_file,
                     "line " + std::to_string(line_number) + ": point " + std::to_string(value) +
                         " outside {1,...," + std::to_string(ground) + "}",
                     line_number);
            if (!points.empty() && value <= points.back())
                fail(errc::bad_cover_file,
                     "line " + std::to_string(line_number) + ": points must be strictly ascending",
                     line_number);
            points.push_back(value);
        }
        sets.push_back(std::move(points));
    }
    if (static_cast<long long>(sets.size()) < count)
        fail(errc::bad_cover_file, "expected " + std::to_string(count) + " set lines, found " +
                                       std::to_string(sets.size()));
    while (std::getline(in, raw)) {
        ++line_number;
        const std::string_view line = chomp(raw);
        if (!is_blank(line) && line.front() != '#')
            fail(errc::bad_cover_file,
                 "line " + std::to_string(line_number) + ": unexpected data after the set lines",
                 line_number);
    }
    return Cover(static_cast<int>(ground), std::move(sets));
}

Cover parse_cover(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_cover(in);
}

std::string render_cover(const Cover& cover) {
    std::string out = "points " + std::to_string(cover.ground_size()) + " sets " +
                      std::to_string(cover.set_count()) + "\n";
    for (const std::vector<int>& set : cover.sets()) {
        bool first = true;
        for (int p : set) {
            if (!first)
                out += ' ';
            out += std::to_string(p);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace neurotop
