#pragma once

#include <cstdint>
#include <vector>

#include "levelnum/graph.hpp"

namespace levelnum::testing {

/// Canonical code of a graph on at most 11 vertices: the largest
/// upper-triangle adjacency bit string over all labelings that list vertices
/// by non-increasing degree. Isomorphic graphs get equal codes.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs with
/// 1..max_vertices vertices, ordered by vertex count, then edge count, then
/// code. Built by attaching a new vertex to every nonempty subset of an
/// existing graph's vertices (every connected graph has a vertex whose
/// removal keeps it connected).
std::vector<Graph> connected_graphs(int max_vertices);

/// Same, restricted to exactly `n` vertices.
std::vector<Graph> connected_graphs_exactly(int n);

}  // namespace levelnum::testing
