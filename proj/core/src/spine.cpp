#include "levelnum/spine.hpp"

#include <algorithm>
#include <unordered_map>

#include "levelnum/errors.hpp"

namespace levelnum {

Spine::Spine(std::vector<Vertex> cycle) : sequence_(std::move(cycle)) {
  if (sequence_.size() < 3) {
    throw InvalidInput("a spine needs at least three vertices");
  }
  const Vertex max_vertex = *std::ranges::max_element(sequence_);
  if (*std::ranges::min_element(sequence_) < 0) {
    throw InvalidInput("negative vertex id in spine");
  }
  position_.assign(static_cast<std::size_t>(max_vertex) + 1, -1);
  for (Vertex v : sequence_) {
    if (position_[static_cast<std::size_t>(v)] != -1) {
      throw InvalidInput("spine repeats vertex " + std::to_string(v));
    }
    position_[static_cast<std::size_t>(v)] = 0;
  }

  const auto first = std::ranges::min_element(sequence_);
  std::ranges::rotate(sequence_, first);
  if (sequence_[1] > sequence_.back()) {
    std::reverse(sequence_.begin() + 1, sequence_.end());
  }
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    position_[static_cast<std::size_t>(sequence_[i])] = static_cast<int>(i);
  }
}

bool Spine::contains(Vertex v) const noexcept { return position(v) >= 0; }

int Spine::position(Vertex v) const noexcept {
  if (v < 0 || static_cast<std::size_t>(v) >= position_.size()) {
    return -1;
  }
  return position_[static_cast<std::size_t>(v)];
}

std::strong_ordering operator<=>(const Spine& a, const Spine& b) {
  if (auto c = a.sequence_.size() <=> b.sequence_.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.sequence_.begin(), a.sequence_.end(), b.sequence_.begin(),
                                                b.sequence_.end());
}

bool is_cycle_of(const Graph& g, const Spine& spine) {
  const auto seq = spine.vertices();
  if (seq.back() >= g.vertex_count()) {
    return false;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) {
      return false;
    }
  }
  return true;
}

Spine make_spine(const Graph& g, std::vector<Vertex> cycle) {
  Spine spine(std::move(cycle));
  if (!is_cycle_of(g, spine)) {
    throw InvalidInput("spine is not a cycle of the graph");
  }
  return spine;
}

std::vector<Fragment> fragments(const Graph& g, const Spine& spine) {
  if (!is_cycle_of(g, spine)) {
    throw InvalidInput("spine is not a cycle of the graph");
  }
  const int n = g.vertex_count();
  const int length = static_cast<int>(spine.size());

  // Component id per off-spine vertex.
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<Fragment> bridges;
  for (Vertex s = 0; s < n; ++s) {
    if (spine.contains(s) || component[static_cast<std::size_t>(s)] != -1) {
      continue;
    }
    const int id = static_cast<int>(bridges.size());
    bridges.emplace_back();
    std::vector<Vertex> stack{s};
    component[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      bridges.back().internal_vertices.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!spine.contains(w) && component[static_cast<std::size_t>(w)] == -1) {
          component[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }

  std::vector<Fragment> result;
  for (const Edge& e : g.edges()) {
    const int pu = spine.position(e.u);
    const int pv = spine.position(e.v);
    if (pu >= 0 && pv >= 0) {
      const int gap = std::abs(pu - pv);
      if (gap == 1 || gap == length - 1) {
        continue;  // spine edge
      }
      Fragment chord;
      chord.attachment_edges.push_back(e);
      chord.attachments = {std::min(pu, pv), std::max(pu, pv)};
      result.push_back(std::move(chord));
    } else if (pu >= 0 || pv >= 0) {
      const Vertex inner = pu >= 0 ? e.v : e.u;
      Fragment& f = bridges[static_cast<std::size_t>(component[static_cast<std::size_t>(inner)])];
      f.attachment_edges.push_back(e);
      f.attachments.push_back(pu >= 0 ? pu : pv);
    } else {
      bridges[static_cast<std::size_t>(component[static_cast<std::size_t>(e.u)])].internal_edges.push_back(e);
    }
  }
  for (Fragment& f : bridges) {
    std::ranges::sort(f.internal_vertices);
    std::ranges::sort(f.attachments);
    f.attachments.erase(std::unique(f.attachments.begin(), f.attachments.end()), f.attachments.end());
    result.push_back(std::move(f));
  }

  std::ranges::sort(result, [](const Fragment& a, const Fragment& b) {
    if (a.attachments != b.attachments) {
      return a.attachments < b.attachments;
    }
    if (a.internal_vertices.size() != b.internal_vertices.size()) {
      return a.internal_vertices.size() < b.internal_vertices.size();
    }
    return a.internal_vertices < b.internal_vertices;
  });
  return result;
}

bool interleaves(std::span<const int> first, std::span<const int> second) {
  if (first.size() < 2 || second.size() < 2) {
    return false;
  }
  const auto count_open = [&](int lo, int hi) {
    // Points of `second` strictly between lo and hi (lo < hi).
    const auto from = std::ranges::upper_bound(second, lo);
    const auto to = std::ranges::lower_bound(second, hi);
    return from < to ? static_cast<std::size_t>(to - from) : std::size_t{0};
  };
  const auto member = [&](int p) { return std::ranges::binary_search(second, p) ? std::size_t{1} : 0; };

  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = i + 1; j < first.size(); ++j) {
      const int a = first[i];
      const int b = first[j];
      const std::size_t inside = count_open(a, b);
      if (inside == 0) {
        continue;
      }
      const std::size_t outside = second.size() - inside - member(a) - member(b);
      if (outside > 0) {
        return true;
      }
    }
  }
  return false;
}

bool conflicts(const Fragment& f, const Fragment& h, const Spine& /*spine*/) {
  std::size_t common = 0;
  auto i = f.attachments.begin();
  auto j = h.attachments.begin();
  while (i != f.attachments.end() && j != h.attachments.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common >= 3 || interleaves(f.attachments, h.attachments);
}

ConflictGraph conflict_graph(std::vector<Fragment> frags, const Spine& spine) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < frags.size(); ++i) {
    for (std::size_t j = i + 1; j < frags.size(); ++j) {
      if (conflicts(frags[i], frags[j], spine)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  const int count = static_cast<int>(frags.size());
  return ConflictGraph{std::move(frags), Graph(count, edges)};
}

ConflictGraph conflict_graph(const Graph& g, const Spine& spine) { return conflict_graph(fragments(g, spine), spine); }

namespace {

// Relabels spine vertices to their positions and internal vertices after
// them, so the planarity graphs stay compact.
class LocalGraph {
 public:
  explicit LocalGraph(const Spine& spine) : spine_(spine), next_(static_cast<int>(spine.size())) {}

  void add_spine_cycle() {
    const int length = static_cast<int>(spine_.size());
    for (int i = 0; i < length; ++i) {
      edges_.emplace_back(i, (i + 1) % length);
    }
  }

  void add_fragment(const Fragment& f) {
    for (const Edge& e : f.internal_edges) {
      edges_.emplace_back(local(e.u), local(e.v));
    }
    for (const Edge& e : f.attachment_edges) {
      edges_.emplace_back(local(e.u), local(e.v));
    }
  }

  void add_apex() {
    const int apex = next_++;
    for (int i = 0; i < static_cast<int>(spine_.size()); ++i) {
      edges_.emplace_back(i, apex);
    }
  }

  bool planar() const { return is_planar(Graph(next_, edges_)); }

 private:
  int local(Vertex v) {
    if (const int p = spine_.position(v); p >= 0) {
      return p;
    }
    auto [it, inserted] = internal_.try_emplace(v, next_);
    if (inserted) {
      ++next_;
    }
    return it->second;
  }

  const Spine& spine_;
  int next_;
  std::unordered_map<Vertex, int> internal_;
  std::vector<Edge> edges_;
};

}  // namespace

bool fragment_disk_embeddable(const Fragment& f, const Spine& spine, DiskTest test) {
  if (f.is_chord()) {
    return true;
  }
  LocalGraph local(spine);
  if (test == DiskTest::with_spine) {
    local.add_spine_cycle();
  }
  local.add_fragment(f);
  return local.planar();
}

bool jointly_disk_embeddable(std::span<const Fragment* const> fs, const Spine& spine) {
  LocalGraph local(spine);
  local.add_spine_cycle();
  for (const Fragment* f : fs) {
    local.add_fragment(*f);
  }
  local.add_apex();
  return local.planar();
}

bool jointly_disk_embeddable(std::span<const Fragment> fs, const Spine& spine) {
  std::vector<const Fragment*> ptrs;
  ptrs.reserve(fs.size());
  for (const Fragment& f : fs) {
    ptrs.push_back(&f);
  }
  return jointly_disk_embeddable(ptrs, spine);
}

}  // namespace levelnum
