#include "levelnum/errors.hpp"
#include "levelnum/invariants.hpp"

namespace levelnum {

namespace {

// Assigns edges in canonical order to at most k classes, keeping each class
// planar. Edge 0 always goes to class 0 and a new class opens only after all
// lower ones are in use, which removes the k! relabelings of a solution.
class PlanarPartition {
 public:
  PlanarPartition(const Graph& g, int k) : graph_(g), classes_(static_cast<std::size_t>(k)) {}

  bool solve() { return place(0, 0); }

  std::vector<std::vector<std::size_t>> classes() const { return classes_; }

 private:
  bool planar_class(const std::vector<std::size_t>& members) const {
    std::vector<Edge> edges;
    edges.reserve(members.size());
    for (std::size_t i : members) {
      edges.push_back(graph_.edges()[i]);
    }
    return is_planar(Graph(graph_.vertex_count(), edges));
  }

  bool place(std::size_t edge, std::size_t used) {
    if (edge == graph_.edge_count()) {
      return true;
    }
    const std::size_t open = std::min(used + 1, classes_.size());
    for (std::size_t c = 0; c < open; ++c) {
      auto& members = classes_[c];
      members.push_back(edge);
      if (planar_class(members) && place(edge + 1, std::max(used, c + 1))) {
        return true;
      }
      members.pop_back();
    }
    return false;
  }

  const Graph& graph_;
  std::vector<std::vector<std::size_t>> classes_;
};

}  // namespace

std::vector<std::vector<std::size_t>> thickness_partition(const Graph& g, int max_edges) {
  if (g.edge_count() > static_cast<std::size_t>(max_edges)) {
    throw SizeLimitExceeded("thickness limited to " + std::to_string(max_edges) + " edges, graph has " +
                            std::to_string(g.edge_count()));
  }
  if (g.edge_count() == 0) {
    return {};
  }
  for (int k = 1;; ++k) {
    PlanarPartition search(g, k);
    if (search.solve()) {
      return search.classes();
    }
  }
}

int thickness(const Graph& g, int max_edges) { return static_cast<int>(thickness_partition(g, max_edges).size()); }

}  // namespace levelnum
