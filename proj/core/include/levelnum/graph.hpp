#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace levelnum {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex ids 0..vertex_count()-1.
///
/// The edge set is canonical: every edge has u < v, duplicates are collapsed
/// and edges() is sorted lexicographically. Adjacency lists are sorted too, so
/// every traversal over a Graph is deterministic. Instances are immutable.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on a self-loop, a negative count or an endpoint out
  /// of range. Parallel edges are merged.
  explicit Graph(int vertex_count, std::span<const Edge> edges = {});
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

enum class Family { complete, complete_bipartite, cycle, path, moebius_ladder };

/// Named graph family with its size parameters. `second` is used only by
/// complete_bipartite.
struct FamilySpec {
  Family family = Family::complete;
  int first = 0;
  int second = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses the shorthand used on the command line: "K5", "K3,3", "C7", "P4",
/// "M16". Throws InvalidInput on anything else.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// complete: all pairs. complete_bipartite: parts {0..m-1} and {m..m+n-1}.
/// cycle: i ~ i+1 mod n. path: i ~ i+1. moebius_ladder 2k: cycle on 2k
/// vertices plus rungs i ~ i+k for i < k.
Graph generate(const FamilySpec& spec);

/// Edge-list text: one "u v" per line, '#' comments, blank lines, and an
/// optional "n <count>" header fixing the vertex count.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list; always emits the "n" header so isolated
/// vertices survive the round trip.
std::string render_edge_list(const Graph& g);

bool is_connected(const Graph& g);

/// True when g is exactly one cycle through all of its vertices.
bool is_cycle_graph(const Graph& g);

/// g plus a new vertex (id g.vertex_count()) adjacent to exactly `targets`.
Graph add_apex(const Graph& g, std::span<const Vertex> targets);
Graph add_apex(const Graph& g);

/// Planarity of the whole graph; disconnected input is fine.
bool is_planar(const Graph& g);

/// Planarity of g plus an apex joined to every vertex.
bool is_outerplanar(const Graph& g);

}  // namespace levelnum
