#ifndef PG_CANONICAL_HPP
#define PG_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

inline constexpr int kMaxCanonicalVertices = 512;

// Canonical labeling of a graph. bytes is an adjacency-matrix serialization
// under the canonical vertex order and is equal for two graphs iff they are
// isomorphic; labeling[v] is the canonical position of vertex v, and applying
// it to the source graph reproduces bytes. The byte layout is an internal
// format and not stable across versions.
struct CanonicalForm {
    std::string bytes;
    std::vector<int> labeling;
};

// Throws Error(SizeBound) when the graph has more than max_vertices vertices.
CanonicalForm canonical_form(const Graph& g, int max_vertices = kMaxCanonicalVertices);
CanonicalForm canonical_form(const DiGraph& d, int max_vertices = kMaxCanonicalVertices);

// Vertex bijection a -> b preserving adjacency exactly, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b,
                                               int max_vertices = kMaxCanonicalVertices);

bool are_digraph_isomorphic(const DiGraph& a, const DiGraph& b,
                            int max_vertices = kMaxCanonicalVertices);

}  // namespace pg

#endif
