#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neurotop/code.hpp"

namespace neurotop {

class Cover;

/// Face counts by dimension: counts[k] = number of k-dimensional faces
/// (k+1 vertices).  The empty face is not counted; the void complex and
/// the {empty-face}-only complex both have an empty sequence.
struct FVector {
    std::vector<long long> counts;

    int dimension() const noexcept { return static_cast<int>(counts.size()) - 1; }

    /// "(3,3)"; "()" for an empty sequence.
    std::string to_string() const;

    friend bool operator==(const FVector&, const FVector&) = default;
};

/**
 * An abstract simplicial complex on vertices from {1,...,n}, stored by its
 * inclusion-maximal faces.  Downward closure is implicit: a set is a face
 * iff it lies under some facet.  A nonempty complex always contains the
 * empty face; the void complex (no faces at all) is represented by an
 * empty facet list.
 */
class SimplicialComplex {
public:
    /// Dominated and duplicate inputs are dropped.
    static SimplicialComplex from_facets(int n, std::vector<std::uint64_t> facets);

    /// Builds from an arbitrary downward-closed family given extensionally.
    static SimplicialComplex from_faces(int n, const std::vector<std::uint64_t>& faces);

    static SimplicialComplex void_complex(int n);

    int vertex_capacity() const noexcept { return n_; }

    bool is_void() const noexcept { return facets_.empty(); }

    bool is_face(std::uint64_t face) const;

    /// Maximal faces, sorted by (size, set-lex).
    const std::vector<std::uint64_t>& facets() const noexcept { return facets_; }

    /// Every face including the empty one, sorted by (size, set-lex).
    /// Exponential in facet size; facets above kMaxEnumerationBits are
    /// rejected.
    std::vector<std::uint64_t> all_faces() const;

    /// Union of all facets.
    std::uint64_t vertex_mask() const noexcept;

    /// Ascending 1-based vertex list.
    std::vector<int> vertices() const { return mask_to_indices(vertex_mask()); }

    /// Max face dimension; -1 for the void and {empty-face}-only complexes.
    int dimension() const noexcept;

    FVector f_vector() const;

    /// Alternating sum of face counts, empty face excluded.
    long long euler_characteristic() const;

    /// One facet per line as comma-separated ascending indices; the empty
    /// face renders "{}".
    std::string render_facets() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<std::uint64_t> facets);

    int n_;
    std::vector<std::uint64_t> facets_;
};

/// The complex whose faces are the supports of the simplicial completion
/// of the code.  The empty code gives the void complex.
SimplicialComplex delta_complex(const Code& code);

/// The nerve of a cover: an index set is a face iff its members'
/// intersection is nonempty (the empty set is always a face).  Built by
/// direct intersection tests on the cover's point sets.
SimplicialComplex nerve(const Cover& cover);

}  // namespace neurotop
