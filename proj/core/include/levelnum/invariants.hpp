#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levelnum/graph.hpp"
#include "levelnum/leveling.hpp"

namespace levelnum {

/// Permutation of all vertices up to rotation and reflection, canonicalized
/// like a Spine. Consecutive vertices need not be adjacent.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  /// Throws InvalidInput unless `order` is a permutation of 0..size-1.
  explicit CyclicOrder(std::vector<Vertex> order);

  std::span<const Vertex> vertices() const noexcept { return order_; }
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

/// Pages for a fixed printing cycle: an optimal coloring of the graph whose
/// vertices are the edges of g (in g.edges() order) and whose adjacency is
/// interleaving along the order.
struct PageAssignment {
  int pages = 0;
  std::vector<int> page_of_edge;
};
PageAssignment pages_for_order(const Graph& g, const CyclicOrder& order);

struct BookEmbedding {
  CyclicOrder order;
  PageAssignment pages;
};

/// Exact book thickness with its witness: minimum over all cyclic orders.
/// Throws SizeLimitExceeded when g has more than `max_vertices` vertices.
BookEmbedding book_embedding(const Graph& g, int max_vertices = 9);
int book_thickness(const Graph& g, int max_vertices = 9);

/// Exact thickness: fewest planar subgraphs partitioning the edges. Throws
/// SizeLimitExceeded when g has more than `max_edges` edges.
int thickness(const Graph& g, int max_edges = 18);

/// Edge classes of a minimum planar partition, each a list of edge indices.
std::vector<std::vector<std::size_t>> thickness_partition(const Graph& g, int max_edges = 18);

struct ExpectedLevels {
  LevelValue level;
  /// Infinite for graphs without a hamiltonian cycle.
  LevelValue hamiltonian_level;
};

/// Closed-form level numbers for complete and complete bipartite graphs.
/// Graphs without cycles get infinity, a lone 4-cycle K2,2 gets 0 like any
/// other cycle graph. Throws InvalidInput for other families.
ExpectedLevels expected_values(const FamilySpec& spec);

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus status);

/// One computed quantity of a report: a value, or the reason it is missing.
template <class T>
struct Field {
  std::optional<T> value;
  std::string skipped_reason;
  double seconds = 0.0;
};

struct InequalityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  CheckStatus status = CheckStatus::skipped;
};

struct ReportLimits {
  int book_max_vertices = 9;
  int thickness_max_edges = 18;
  SolveOptions solve;
};

struct InvariantReport {
  std::string graph_id;
  Field<LevelResult> level;
  Field<LevelResult> hamiltonian_level;
  Field<int> book_thickness;
  Field<int> thickness;

  /// theta <= l, bt <= hl, l <= hl. Derived from the stored fields on every
  /// call. A finite level count of 0 (the graph is its own spine) is read as
  /// one planar piece, since the spine edges still need a page or a plane.
  std::vector<InequalityCheck> checks() const;
  bool all_pass() const;
};

InvariantReport validate_inequalities(const Graph& g, std::string graph_id, const ReportLimits& limits = {});

}  // namespace levelnum
