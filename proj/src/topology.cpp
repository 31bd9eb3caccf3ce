#include "neurotop/topology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace neurotop {

namespace {

// faces of the given dimension, lexicographically ordered
std::vector<std::uint64_t> faces_of_dim(const SimplicialComplex& k, int dim) {
    std::vector<std::uint64_t> out;
    if (dim < 0)
        return out;
    for (std::uint64_t face : k.all_faces())
        if (popcount(face) == dim + 1)
            out.push_back(face);
    return out;  // all_faces is already (size, lex) sorted
}

// ascending adjacency lists of the 1-skeleton, keyed by vertex
std::map<int, std::vector<int>> skeleton_adjacency(const SimplicialComplex& k) {
    std::map<int, std::set<int>> adjacency;
    for (int v : k.vertices())
        adjacency[v];
    for (std::uint64_t facet : k.facets()) {
        const std::vector<int> members = mask_to_indices(facet);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                adjacency[members[a]].insert(members[b]);
                adjacency[members[b]].insert(members[a]);
            }
    }
    std::map<int, std::vector<int>> out;
    for (auto& [v, neighbors] : adjacency)
        out.emplace(v, std::vector<int>(neighbors.begin(), neighbors.end()));
    return out;
}

}  // namespace

Gf2Matrix boundary_matrix(const SimplicialComplex& k, int dim) {
    if (dim < 0)
        fail(errc::bad_argument, "boundary dimension must be nonnegative");
    const std::vector<std::uint64_t> domain = faces_of_dim(k, dim);
    const std::vector<std::uint64_t> codomain = faces_of_dim(k, dim - 1);
    Gf2Matrix matrix(codomain.size(), domain.size());
    std::map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r)
        row_of.emplace(codomain[r], r);
    for (std::size_t c = 0; c < domain.size(); ++c) {
        std::uint64_t rest = domain[c];
        while (rest != 0) {
            const std::uint64_t low = rest & (0 - rest);
            const auto it = row_of.find(domain[c] ^ low);
            if (it != row_of.end())
                matrix.set(it->second, c, true);
            rest ^= low;
        }
    }
    return matrix;
}

std::size_t boundary_rank(const SimplicialComplex& k, int dim) {
    return boundary_matrix(k, dim).rank();
}

std::string BettiVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += 'b';
        out += std::to_string(i);
        out += '=';
        out += std::to_string(values[i]);
    }
    return out;
}

BettiVector betti_numbers(const SimplicialComplex& k, int kmax) {
    if (kmax < 0)
        fail(errc::bad_argument, "kmax must be nonnegative");
    if (kmax > kMaxLength)
        fail(errc::bad_argument, "kmax beyond the vertex capacity " + std::to_string(kMaxLength));
    const FVector fv = k.f_vector();
    BettiVector betti;
    betti.values.reserve(static_cast<std::size_t>(kmax) + 1);
    std::size_t rank_low = 0;  // rank of d_0 is 0
    for (int dim = 0; dim <= kmax; ++dim) {
        const long long count =
            dim <= fv.dimension() ? fv.counts[static_cast<std::size_t>(dim)] : 0;
        const std::size_t rank_high =
            dim + 1 <= fv.dimension() ? boundary_rank(k, dim + 1) : 0;
        betti.values.push_back(count - static_cast<long long>(rank_low) -
                               static_cast<long long>(rank_high));
        rank_low = rank_high;
    }
    return betti;
}

std::vector<std::vector<int>> connected_components(const SimplicialComplex& k) {
    const auto adjacency = skeleton_adjacency(k);
    std::set<int> unvisited;
    for (const auto& [v, _] : adjacency)
        unvisited.insert(v);
    std::vector<std::vector<int>> classes;
    while (!unvisited.empty()) {
        const int start = *unvisited.begin();
        std::vector<int> component;
        std::queue<int> frontier;
        frontier.push(start);
        unvisited.erase(start);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            component.push_back(v);
            for (int w : adjacency.at(v))
                if (unvisited.erase(w) > 0)
                    frontier.push(w);
        }
        std::sort(component.begin(), component.end());
        classes.push_back(std::move(component));
    }
    // classes are found in order of their smallest member already
    return classes;
}

std::string Pi1Presentation::to_string() const {
    std::string out = "generators:";
    if (generators.empty()) {
        out += " none";
    } else {
        for (std::size_t i = 0; i < generators.size(); ++i) {
            out += i == 0 ? " " : ", ";
            out += "e(" + std::to_string(generators[i].first) + ',' +
                   std::to_string(generators[i].second) + ')';
        }
    }
    out += "\nrelations:\n";
    for (const std::vector<int>& word : relations) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i > 0)
                out += '*';
            out += 'g';
            out += std::to_string(word[i] > 0 ? word[i] : -word[i]);
            if (word[i] < 0)
                out += "^-1";
        }
        out += '\n';
    }
    return out;
}

Pi1Presentation pi1_presentation(const SimplicialComplex& k, int basepoint) {
    if (!k.is_face(std::uint64_t{1} << (basepoint - 1)))
        fail(errc::missing_basepoint,
             "basepoint " + std::to_string(basepoint) + " is not a vertex");
    const auto adjacency = skeleton_adjacency(k);

    // breadth-first spanning tree, neighbors in ascending order
    std::set<std::pair<int, int>> tree_edges;
    std::set<int> visited = {basepoint};
    std::queue<int> frontier;
    frontier.push(basepoint);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : adjacency.at(v))
            if (visited.insert(w).second) {
                tree_edges.emplace(std::min(v, w), std::max(v, w));
                frontier.push(w);
            }
    }
    if (visited.size() != adjacency.size())
        fail(errc::disconnected, "complex is not connected");

    Pi1Presentation presentation;
    presentation.basepoint = basepoint;
    std::map<std::pair<int, int>, int> generator_id;  // 1-based
    for (const auto& [v, neighbors] : adjacency)
        for (int w : neighbors) {
            if (w < v)
                continue;
            const std::pair<int, int> edge{v, w};
            if (!tree_edges.count(edge)) {
                presentation.generators.push_back(edge);
                generator_id.emplace(edge, static_cast<int>(presentation.generators.size()));
            }
        }

    // one relation per 2-face, reading the boundary loop a->b->c->a
    auto letter = [&](int u, int v) {
        const auto it = generator_id.find({std::min(u, v), std::max(u, v)});
        if (it == generator_id.end())
            return 0;  // tree edge, trivial
        return u < v ? it->second : -it->second;
    };
    for (std::uint64_t face : faces_of_dim(k, 2)) {
        const std::vector<int> corners = mask_to_indices(face);
        std::vector<int> word;
        for (const auto& [u, v] : {std::pair{corners[0], corners[1]},
                                   std::pair{corners[1], corners[2]},
                                   std::pair{corners[2], corners[0]}}) {
            const int l = letter(u, v);
            if (l != 0)
                word.push_back(l);
        }
        presentation.relations.push_back(std::move(word));
    }
    return presentation;
}

int helly_lower_bound(const SimplicialComplex& k) {
    const std::vector<std::uint64_t> faces = k.all_faces();
    const std::unordered_set<std::uint64_t> face_set(faces.begin(), faces.end());
    const std::uint64_t vertex_mask = k.vertex_mask();
    int best = 0;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t face : faces) {
        std::uint64_t rest = vertex_mask & ~face;
        while (rest != 0) {
            const std::uint64_t low = rest & (0 - rest);
            rest ^= low;
            const std::uint64_t candidate = face | low;
            if (face_set.count(candidate) || !seen.insert(candidate).second)
                continue;
            // minimal non-face: every maximal proper subset is a face
            bool minimal = true;
            std::uint64_t members = candidate;
            while (members != 0) {
                const std::uint64_t bit = members & (0 - members);
                members ^= bit;
                if (!face_set.count(candidate ^ bit)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal)
                best = std::max(best, popcount(candidate) - 1);
        }
    }
    return best;
}

std::vector<int> shortest_edge_path(const SimplicialComplex& k, int from, int to) {
    for (int v : {from, to})
        if (v < 1 || !k.is_face(std::uint64_t{1} << (v - 1)))
            fail(errc::missing_vertex, "vertex " + std::to_string(v) + " is not in the complex");
    if (from == to)
        return {from};
    const auto adjacency = skeleton_adjacency(k);
    std::map<int, int> parent;
    std::queue<int> frontier;
    frontier.push(from);
    parent.emplace(from, from);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : adjacency.at(v)) {
            if (parent.count(w))
                continue;
            parent.emplace(w, v);
            if (w == to) {
                std::vector<int> path = {to};
                for (int u = to; u != from; u = parent.at(u))
                    path.push_back(parent.at(u));
                std::reverse(path.begin(), path.end());
                return path;
            }
            frontier.push(w);
        }
    }
    fail(errc::no_path, "vertices " + std::to_string(from) + " and " + std::to_string(to) +
                            " are in different components");
}

}  // namespace neurotop
