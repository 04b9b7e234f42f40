#include <vector>

#include "levelnum/spine.hpp"

namespace levelnum {

namespace {

enum class Flow { proceed, stop_visitor, stop_cap };

// Depth-first search over simple paths that start at `root` and only use
// vertices larger than it. Emits the closed paths of exactly `length`
// vertices whose second vertex is smaller than their last, which is the
// canonical orientation. Neighbours are tried in increasing order, so
// emission is lexicographic.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, const SpineVisitor& visit, std::optional<std::size_t> cap)
      : graph_(g), visit_(visit), cap_(cap), on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  Flow run(Vertex root, std::size_t length) {
    root_ = root;
    length_ = length;
    path_.assign(1, root);
    on_path_[static_cast<std::size_t>(root)] = 1;
    const Flow flow = extend();
    on_path_[static_cast<std::size_t>(root)] = 0;
    return flow;
  }

  EnumerationStatus status() const { return status_; }

 private:
  Flow extend() {
    const Vertex tail = path_.back();
    if (path_.size() == length_) {
      if (path_[1] < tail && graph_.has_edge(tail, root_)) {
        return emit();
      }
      return Flow::proceed;
    }
    for (Vertex w : graph_.neighbors(tail)) {
      if (w <= root_ || on_path_[static_cast<std::size_t>(w)]) {
        continue;
      }
      path_.push_back(w);
      on_path_[static_cast<std::size_t>(w)] = 1;
      const Flow flow = extend();
      on_path_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
      if (flow != Flow::proceed) {
        return flow;
      }
    }
    return Flow::proceed;
  }

  Flow emit() {
    if (cap_ && status_.emitted >= *cap_) {
      status_.truncated = true;
      return Flow::stop_cap;
    }
    ++status_.emitted;
    return visit_(Spine(path_)) ? Flow::proceed : Flow::stop_visitor;
  }

  const Graph& graph_;
  const SpineVisitor& visit_;
  std::optional<std::size_t> cap_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex root_ = 0;
  std::size_t length_ = 0;
  EnumerationStatus status_;
};

}  // namespace

EnumerationStatus enumerate_cycles(const Graph& g, const SpineVisitor& visit, std::optional<std::size_t> cap) {
  CycleSearch search(g, visit, cap);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (std::size_t length = 3; length <= n; ++length) {
    for (Vertex root = 0; static_cast<std::size_t>(root) + length <= n; ++root) {
      if (search.run(root, length) != Flow::proceed) {
        return search.status();
      }
    }
  }
  return search.status();
}

SpineList all_cycles(const Graph& g, std::optional<std::size_t> cap) {
  SpineList out;
  out.truncated = enumerate_cycles(
                      g,
                      [&](const Spine& s) {
                        out.spines.push_back(s);
                        return true;
                      },
                      cap)
                      .truncated;
  return out;
}

EnumerationStatus enumerate_hamiltonian_cycles(const Graph& g, const SpineVisitor& visit) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n < 3) {
    return {};
  }
  CycleSearch search(g, visit, std::nullopt);
  search.run(0, n);
  return search.status();
}

std::vector<Spine> all_hamiltonian_cycles(const Graph& g) {
  std::vector<Spine> out;
  enumerate_hamiltonian_cycles(g, [&](const Spine& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace levelnum
