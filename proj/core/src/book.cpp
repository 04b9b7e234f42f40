#include <algorithm>
#include <array>
#include <numeric>

#include "levelnum/coloring.hpp"
#include "levelnum/errors.hpp"
#include "levelnum/invariants.hpp"
#include "levelnum/spine.hpp"

namespace levelnum {

CyclicOrder::CyclicOrder(std::vector<Vertex> order) : order_(std::move(order)) {
  position_.assign(order_.size(), -1);
  for (Vertex v : order_) {
    if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || position_[static_cast<std::size_t>(v)] != -1) {
      throw InvalidInput("cyclic order must be a permutation of all vertices");
    }
    position_[static_cast<std::size_t>(v)] = 0;
  }
  if (!order_.empty()) {
    std::ranges::rotate(order_, std::ranges::min_element(order_));
  }
  if (order_.size() >= 3 && order_[1] > order_.back()) {
    std::reverse(order_.begin() + 1, order_.end());
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
  }
}

namespace {

// Edges of g as vertices, adjacent when they interleave along the order.
Graph page_conflicts(const Graph& g, const CyclicOrder& order) {
  const auto edges = g.edges();
  std::vector<std::array<int, 2>> spans;
  spans.reserve(edges.size());
  for (const Edge& e : edges) {
    const int a = order.position(e.u);
    const int b = order.position(e.v);
    spans.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<Edge> overlap;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (interleaves(spans[i], spans[j])) {
        overlap.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(static_cast<int>(spans.size()), overlap);
}

PageAssignment to_pages(Coloring coloring) {
  return PageAssignment{coloring.colors, std::move(coloring.color_of)};
}

}  // namespace

PageAssignment pages_for_order(const Graph& g, const CyclicOrder& order) {
  if (order.vertices().size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InvalidInput("cyclic order does not cover the graph");
  }
  return to_pages(exact_coloring(page_conflicts(g, order)));
}

BookEmbedding book_embedding(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices) {
    throw SizeLimitExceeded("book thickness limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                            std::to_string(n));
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  BookEmbedding best{CyclicOrder(order), pages_for_order(g, CyclicOrder(order))};
  const int floor = g.edge_count() > 0 ? 1 : 0;
  if (n < 4 || best.pages.pages == floor) {
    return best;
  }
  // Vertex 0 stays first; a permutation and its reflection are the same
  // cyclic order, so only orders with order[1] < order.back() are visited.
  while (std::next_permutation(order.begin() + 1, order.end())) {
    if (order[1] > order.back()) {
      continue;
    }
    CyclicOrder candidate(order);
    std::optional<Coloring> better = exact_coloring_below(page_conflicts(g, candidate), best.pages.pages);
    if (better) {
      best = BookEmbedding{std::move(candidate), to_pages(std::move(*better))};
      if (best.pages.pages == floor) {
        break;
      }
    }
  }
  return best;
}

int book_thickness(const Graph& g, int max_vertices) { return book_embedding(g, max_vertices).pages.pages; }

}  // namespace levelnum
