#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "levelnum/graph.hpp"

namespace levelnum {

// Boyer-Myrvold edge addition, linear time. Works on disconnected graphs.
bool is_planar(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const std::size_t m = g.edge_count();
  if (n < 5 || m < 9) {
    return true;
  }
  if (m > 3 * n - 6) {
    return false;
  }
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (const Edge& e : g.edges()) {
    boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace levelnum
