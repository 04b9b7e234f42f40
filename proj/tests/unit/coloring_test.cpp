#include <gtest/gtest.h>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "levelnum/coloring.hpp"
#include "levelnum/leveling.hpp"

namespace levelnum {
namespace {

using testing::family;

// Plain backtracking in vertex order, smallest k first.
int chromatic_brute(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int k = 0;; ++k) {
    const auto place = [&](auto& self, int v) -> bool {
      if (v == n) {
        return true;
      }
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(v)) {
          ok = ok && color[static_cast<std::size_t>(w)] != c;
        }
        if (ok) {
          color[static_cast<std::size_t>(v)] = c;
          if (self(self, v + 1)) {
            return true;
          }
          color[static_cast<std::size_t>(v)] = -1;
        }
      }
      return false;
    };
    if (place(place, 0)) {
      return k;
    }
  }
}

Graph grotzsch() {
  // Mycielskian of C5: triangle-free, chromatic number 4.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i + 5, (i + 1) % 5);
    edges.emplace_back(i + 5, (i + 4) % 5);
    edges.emplace_back(i + 5, 10);
  }
  return Graph(11, edges);
}

TEST(Coloring, EmptyGraphNeedsNoColors) {
  EXPECT_EQ(exact_coloring(Graph(0)).colors, 0);
  EXPECT_EQ(chromatic_number(ConflictGraph{}).colors, 0);
}

TEST(Coloring, SingleEdgeNeedsTwo) { EXPECT_EQ(exact_coloring(Graph(2, {Edge(0, 1)})).colors, 2); }

TEST(Coloring, ConflictGraphOfK6NeedsThree) {
  const ConflictGraph cg = conflict_graph(family("K6"), Spine({0, 1, 2, 3, 4, 5}));
  const Coloring c = chromatic_number(cg);
  EXPECT_EQ(c.colors, 3);
  EXPECT_TRUE(is_proper_coloring(cg.adjacency, c.color_of));
}

TEST(Coloring, OddCycleAndCliques) {
  EXPECT_EQ(exact_coloring(family("C5")).colors, 3);
  EXPECT_EQ(exact_coloring(family("C6")).colors, 2);
  EXPECT_EQ(exact_coloring(family("K7")).colors, 7);
  EXPECT_EQ(exact_coloring(Graph(4)).colors, 1);
}

TEST(Coloring, TriangleFreeGraphNeedingFour) {
  const Graph g = grotzsch();
  EXPECT_EQ(greedy_clique_bound(g), 2);
  const Coloring c = exact_coloring(g);
  EXPECT_EQ(c.colors, 4);
  EXPECT_TRUE(is_proper_coloring(g, c.color_of));
}

TEST(Coloring, BelowLimit) {
  const Graph g = grotzsch();
  EXPECT_FALSE(exact_coloring_below(g, 4).has_value());
  ASSERT_TRUE(exact_coloring_below(g, 5).has_value());
  EXPECT_EQ(exact_coloring_below(g, 5)->colors, 4);
  EXPECT_FALSE(exact_coloring_below(Graph(0), 0).has_value());
  EXPECT_EQ(exact_coloring_below(Graph(0), 1)->colors, 0);
}

TEST(Coloring, MatchesBacktrackingOnCorpus) {
  for (const Graph& g : testing::connected_graphs(7)) {
    const Coloring c = exact_coloring(g);
    ASSERT_EQ(c.colors, chromatic_brute(g)) << render_edge_list(g);
    ASSERT_TRUE(is_proper_coloring(g, c.color_of));
    ASSERT_LE(greedy_clique_bound(g), c.colors);
  }
}

TEST(Coloring, ProperColoringCheck) {
  const Graph p = family("P4");
  EXPECT_TRUE(is_proper_coloring(p, std::vector<int>{0, 1, 0, 1}));
  EXPECT_FALSE(is_proper_coloring(p, std::vector<int>{0, 0, 1, 0}));
  EXPECT_FALSE(is_proper_coloring(p, std::vector<int>{0, 1}));
}

}  // namespace
}  // namespace levelnum
