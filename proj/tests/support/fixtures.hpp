#pragma once

#include <string_view>
#include <vector>

#include "levelnum/graph.hpp"

namespace levelnum::testing {

inline Graph family(std::string_view name) { return generate(parse_family(name)); }

/// Two disjoint copies of K3,3 (vertices 0..5 and 6..11) plus the edge 0-6.
inline Graph two_k33_joined() {
  std::vector<Edge> edges;
  for (int base : {0, 6}) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 3; b < 6; ++b) {
        edges.emplace_back(base + a, base + b);
      }
    }
  }
  edges.emplace_back(0, 6);
  return Graph(12, edges);
}

inline Graph with_edges(const Graph& g, std::vector<Edge> extra) {
  extra.insert(extra.end(), g.edges().begin(), g.edges().end());
  return Graph(g.vertex_count(), extra);
}

}  // namespace levelnum::testing
