#include "neurotop/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "neurotop/cover.hpp"

namespace neurotop {

std::string FVector::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k > 0)
            out += ',';
        out += std::to_string(counts[k]);
    }
    out += ')';
    return out;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<std::uint64_t> facets)
    : n_(n), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<std::uint64_t> facets) {
    if (n < 0 || n > kMaxLength)
        fail(errc::capacity_exceeded, "vertex capacity out of range");
    for (std::uint64_t f : facets)
        if (n < 64 && (f >> n) != 0)
            fail(errc::bad_argument, "facet has vertices beyond the capacity");
    std::sort(facets.begin(), facets.end(),
              [](std::uint64_t a, std::uint64_t b) { return popcount(a) > popcount(b); });
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t f : facets) {
        bool dominated = false;
        for (std::uint64_t g : maximal)
            if ((f & g) == f) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), size_lex_less);
    return SimplicialComplex(n, std::move(maximal));
}

SimplicialComplex SimplicialComplex::from_faces(int n, const std::vector<std::uint64_t>& faces) {
    // assumes the family is downward closed, so a face is maximal iff no
    // one-vertex extension is in the family
    std::unordered_set<std::uint64_t> family(faces.begin(), faces.end());
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t f : family) {
        bool extendable = false;
        for (int j = 0; j < n && !extendable; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << j;
            if ((f & bit) == 0 && family.count(f | bit))
                extendable = true;
        }
        if (!extendable)
            maximal.push_back(f);
    }
    return from_facets(n, std::move(maximal));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    return from_facets(n, {});
}

bool SimplicialComplex::is_face(std::uint64_t face) const {
    for (std::uint64_t f : facets_)
        if ((face & f) == face)
            return true;
    return false;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    std::unordered_set<std::uint64_t> faces;
    for (std::uint64_t f : facets_) {
        if (popcount(f) > kMaxEnumerationBits)
            fail(errc::capacity_exceeded,
                 "facet of size " + std::to_string(popcount(f)) +
                     " exceeds face-enumeration capacity " +
                     std::to_string(kMaxEnumerationBits));
        std::uint64_t sub = f;
        while (true) {
            faces.insert(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<std::uint64_t> out(faces.begin(), faces.end());
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::uint64_t SimplicialComplex::vertex_mask() const noexcept {
    std::uint64_t mask = 0;
    for (std::uint64_t f : facets_)
        mask |= f;
    return mask;
}

int SimplicialComplex::dimension() const noexcept {
    int dim = -1;
    for (std::uint64_t f : facets_)
        dim = std::max(dim, popcount(f) - 1);
    return dim;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    const int dim = dimension();
    if (dim < 0)
        return fv;
    fv.counts.assign(static_cast<std::size_t>(dim) + 1, 0);
    for (std::uint64_t face : all_faces())
        if (face != 0)
            ++fv.counts[static_cast<std::size_t>(popcount(face) - 1)];
    return fv;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    long long sign = 1;
    for (long long count : f_vector().counts) {
        chi += sign * count;
        sign = -sign;
    }
    return chi;
}

std::string SimplicialComplex::render_facets() const {
    std::string out;
    for (std::uint64_t f : facets_) {
        out += render_index_set(f);
        out += '\n';
    }
    return out;
}

SimplicialComplex delta_complex(const Code& code) {
    // the maximal supports of the code already generate the completion
    std::vector<std::uint64_t> supports;
    supports.reserve(code.size());
    for (const Codeword& w : code.words())
        supports.push_back(w.mask());
    return SimplicialComplex::from_facets(code.length(), std::move(supports));
}

namespace {

struct PointSet {
    std::vector<std::uint64_t> blocks;

    bool any() const noexcept {
        for (std::uint64_t b : blocks)
            if (b != 0)
                return true;
        return false;
    }

    PointSet intersect(const PointSet& other) const {
        PointSet out;
        out.blocks.resize(blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i)
            out.blocks[i] = blocks[i] & other.blocks[i];
        return out;
    }
};

}  // namespace

SimplicialComplex nerve(const Cover& cover) {
    const int n = cover.set_count();
    const int points = cover.ground_size();
    const std::size_t blocks = static_cast<std::size_t>(points + 63) / 64;
    std::vector<PointSet> sets(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        sets[static_cast<std::size_t>(i)].blocks.assign(blocks, 0);
        for (int p : cover.sets()[static_cast<std::size_t>(i)])
            sets[static_cast<std::size_t>(i)].blocks[static_cast<std::size_t>(p - 1) / 64] |=
                std::uint64_t{1} << ((p - 1) % 64);
    }

    // grow faces one vertex at a time, reusing the partial intersections;
    // a face with empty intersection cannot extend to one with more
    std::vector<std::uint64_t> faces = {0};
    struct Frame {
        std::uint64_t face;
        int last;  // highest 0-based index in the face
        PointSet inter;
    };
    std::vector<Frame> stack;
    for (int i = 0; i < n; ++i)
        if (sets[static_cast<std::size_t>(i)].any())
            stack.push_back({std::uint64_t{1} << i, i, sets[static_cast<std::size_t>(i)]});
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        faces.push_back(frame.face);
        for (int j = frame.last + 1; j < n; ++j) {
            PointSet next = frame.inter.intersect(sets[static_cast<std::size_t>(j)]);
            if (next.any())
                stack.push_back({frame.face | (std::uint64_t{1} << j), j, std::move(next)});
        }
    }
    return SimplicialComplex::from_faces(n, faces);
}

}  // namespace neurotop
