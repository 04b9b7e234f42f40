#include "levelnum/coloring.hpp"

#include <algorithm>

namespace levelnum {

bool is_proper_coloring(const Graph& g, std::span<const int> color_of) {
  if (color_of.size() != static_cast<std::size_t>(g.vertex_count())) {
    return false;
  }
  return std::ranges::all_of(g.edges(), [&](const Edge& e) {
    return color_of[static_cast<std::size_t>(e.u)] != color_of[static_cast<std::size_t>(e.v)];
  });
}

int greedy_clique_bound(const Graph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  std::vector<Vertex> clique;
  for (Vertex seed = 0; seed < n; ++seed) {
    if (g.degree(seed) + 1 <= best) {
      continue;
    }
    clique.assign(1, seed);
    // Candidates in decreasing degree order, index as tie-break.
    std::vector<Vertex> candidates(g.neighbors(seed).begin(), g.neighbors(seed).end());
    std::ranges::stable_sort(candidates, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex c : candidates) {
      if (std::ranges::all_of(clique, [&](Vertex member) { return g.has_edge(member, c); })) {
        clique.push_back(c);
      }
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

namespace {

class DsaturSearch {
 public:
  explicit DsaturSearch(const Graph& g)
      : graph_(g),
        n_(g.vertex_count()),
        color_(static_cast<std::size_t>(n_), -1),
        seen_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1), 0),
        saturation_(static_cast<std::size_t>(n_), 0) {}

  /// Greedy DSATUR: every vertex gets the smallest color not on a neighbour.
  Coloring greedy() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      const Vertex v = select();
      int c = 0;
      while (seen(v, c) > 0) {
        ++c;
      }
      assign(v, c);
      used = std::max(used, c + 1);
    }
    Coloring out{used, color_};
    for (Vertex v = 0; v < n_; ++v) {
      unassign(v);
    }
    return out;
  }

  /// Branch and bound below `limit` colors; stops once `lower` is reached.
  std::optional<Coloring> solve(int limit, int lower) {
    best_ = limit;
    lower_ = lower;
    found_.reset();
    expand(0, 0);
    return found_;
  }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(c)]; }

  Vertex select() const {
    Vertex pick = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] != -1) {
        continue;
      }
      if (pick == -1) {
        pick = v;
        continue;
      }
      const int sv = saturation_[static_cast<std::size_t>(v)];
      const int sp = saturation_[static_cast<std::size_t>(pick)];
      if (sv > sp || (sv == sp && graph_.degree(v) > graph_.degree(pick))) {
        pick = v;
      }
    }
    return pick;
  }

  void assign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (Vertex w : graph_.neighbors(v)) {
      if (seen(w, c)++ == 0) {
        ++saturation_[static_cast<std::size_t>(w)];
      }
    }
  }

  void unassign(Vertex v) {
    const int c = color_[static_cast<std::size_t>(v)];
    color_[static_cast<std::size_t>(v)] = -1;
    for (Vertex w : graph_.neighbors(v)) {
      if (--seen(w, c) == 0) {
        --saturation_[static_cast<std::size_t>(w)];
      }
    }
  }

  void expand(int colored, int used) {
    if (colored == n_) {
      best_ = used;
      found_ = Coloring{used, color_};
      return;
    }
    const Vertex v = select();
    for (int c = 0; c <= used; ++c) {
      if (best_ <= lower_) {
        return;
      }
      if (c == used ? used + 1 >= best_ : seen(v, c) > 0) {
        continue;
      }
      assign(v, c);
      expand(colored + 1, std::max(used, c + 1));
      unassign(v);
    }
  }

  const Graph& graph_;
  int n_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  int best_ = 0;
  int lower_ = 0;
  std::optional<Coloring> found_;
};

}  // namespace

std::optional<Coloring> exact_coloring_below(const Graph& g, int limit) {
  if (g.vertex_count() == 0) {
    return limit > 0 ? std::optional<Coloring>(Coloring{}) : std::nullopt;
  }
  const int lower = greedy_clique_bound(g);
  if (lower >= limit) {
    return std::nullopt;
  }
  DsaturSearch search(g);
  Coloring greedy = search.greedy();
  if (greedy.colors == lower) {
    return greedy.colors < limit ? std::optional<Coloring>(std::move(greedy)) : std::nullopt;
  }
  const int start = std::min(limit, greedy.colors);
  std::optional<Coloring> better = search.solve(start, lower);
  if (better) {
    return better;
  }
  if (greedy.colors < limit) {
    return greedy;
  }
  return std::nullopt;
}

Coloring exact_coloring(const Graph& g) {
  return *exact_coloring_below(g, g.vertex_count() + 1);
}

}  // namespace levelnum
