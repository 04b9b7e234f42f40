#pragma once

#include <optional>
#include <span>
#include <vector>

#include "levelnum/graph.hpp"

namespace levelnum {

/// A proper vertex coloring; colors are 0..colors-1.
struct Coloring {
  int colors = 0;
  std::vector<int> color_of;
};

bool is_proper_coloring(const Graph& g, std::span<const int> color_of);

/// Size of a clique grown greedily from every seed vertex; a cheap lower
/// bound on the chromatic number.
int greedy_clique_bound(const Graph& g);

/// Exact chromatic number with an optimal coloring. DSATUR branch and bound
/// seeded with the greedy DSATUR coloring and the greedy clique bound.
/// Deterministic: ties are broken by vertex index.
Coloring exact_coloring(const Graph& g);

/// Like exact_coloring, but only looks for colorings with fewer than `limit`
/// colors. Returns an optimal coloring if the chromatic number is below the
/// limit, nullopt otherwise.
std::optional<Coloring> exact_coloring_below(const Graph& g, int limit);

}  // namespace levelnum
