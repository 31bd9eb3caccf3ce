#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "neurotop/complex.hpp"
#include "neurotop/gf2.hpp"

namespace neurotop {

/// The F2 boundary matrix from dim-faces (columns) to (dim-1)-faces
/// (rows), both ordered lexicographically.  dim 0 maps to the trivial
/// space, so the matrix has zero rows.
Gf2Matrix boundary_matrix(const SimplicialComplex& k, int dim);

/// Rank of the boundary map; 0 for dimensions the complex does not reach.
std::size_t boundary_rank(const SimplicialComplex& k, int dim);

/// Unreduced F2 Betti numbers b_0..b_kmax.
struct BettiVector {
    std::vector<long long> values;

    /// "b0=1 b1=1".
    std::string to_string() const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector betti_numbers(const SimplicialComplex& k, int kmax);

/// Vertex classes of the 1-skeleton, each ascending, ordered by smallest
/// member.  The class count equals b_0 whenever the complex has vertices.
std::vector<std::vector<int>> connected_components(const SimplicialComplex& k);

/**
 * Edge-path presentation of the fundamental group: one generator per edge
 * outside a breadth-first spanning tree, one relation per 2-face.  Letters
 * are signed 1-based generator ids; negative means inverse.
 */
struct Pi1Presentation {
    int basepoint;
    std::vector<std::pair<int, int>> generators;  // non-tree edges (u,v), u < v
    std::vector<std::vector<int>> relations;

    std::size_t generator_count() const noexcept { return generators.size(); }
    std::size_t relation_count() const noexcept { return relations.size(); }

    /// "generators: e(2,3)" then "relations:" with one word per line,
    /// letters rendered "g1" / "g1^-1" joined by '*'.
    std::string to_string() const;
};

/// Requires a connected complex containing the basepoint.  The spanning
/// tree is breadth-first from the basepoint with ascending neighbor order.
Pi1Presentation pi1_presentation(const SimplicialComplex& k, int basepoint);

/**
 * Lower bound on the dimension a convex realization needs: the largest
 * minimal non-face forces that many sets to meet pairwise-but-not-jointly,
 * which convexity caps via Helly's theorem.  0 for a full simplex.
 */
int helly_lower_bound(const SimplicialComplex& k);

/// Shortest path between two vertices in the 1-skeleton, breadth-first
/// with ascending tie-breaking, endpoints included.
std::vector<int> shortest_edge_path(const SimplicialComplex& k, int from, int to);

}  // namespace neurotop
