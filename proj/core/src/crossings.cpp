#include "levelnum/crossings.hpp"

#include <algorithm>
#include <string>

#include "levelnum/errors.hpp"

namespace levelnum {

CrossRelation::CrossRelation(int fragment_count, std::vector<std::pair<int, int>> over)
    : count_(fragment_count), pairs_(std::move(over)), over_(static_cast<std::size_t>(std::max(fragment_count, 0))) {
  if (fragment_count < 0) {
    throw InvalidInput("negative fragment count");
  }
  std::ranges::sort(pairs_);
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& [a, b] : pairs_) {
    if (a < 0 || b < 0 || a >= count_ || b >= count_) {
      throw InvalidInput("crossing pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    }
    if (a == b) {
      throw InvalidInput("fragment " + std::to_string(a) + " crosses over itself");
    }
    if (std::ranges::binary_search(pairs_, std::pair{b, a})) {
      throw InvalidInput("fragments " + std::to_string(a) + " and " + std::to_string(b) +
                         " cross both over and under each other");
    }
    over_[static_cast<std::size_t>(a)].push_back(b);
  }
}

bool CrossRelation::crosses_over(int i, int j) const {
  if (i < 0 || i >= count_) {
    return false;
  }
  return std::ranges::binary_search(over_[static_cast<std::size_t>(i)], j);
}

namespace {

void require_cycle(const CrossRelation& r, const std::vector<int>& cycle) {
  const std::size_t t = cycle.size();
  if (t < 3) {
    throw InvalidInput("a crossing cycle needs at least three fragments");
  }
  std::vector<char> seen(static_cast<std::size_t>(r.fragment_count()), 0);
  for (const int f : cycle) {
    if (f < 0 || f >= r.fragment_count() || seen[static_cast<std::size_t>(f)]) {
      throw InvalidInput("crossing cycle must list distinct fragments in range");
    }
    seen[static_cast<std::size_t>(f)] = 1;
  }
  for (std::size_t i = 0; i < t; ++i) {
    const int f = cycle[i];
    if (!r.crosses_over(cycle[(i + 1) % t], f)) {
      throw InvalidInput("fragment " + std::to_string(f) + " does not cross under " +
                         std::to_string(cycle[(i + 1) % t]));
    }
  }
}

}  // namespace

bool is_consecutive_only(const CrossRelation& r, const std::vector<int>& cycle) {
  try {
    require_cycle(r, cycle);
  } catch (const InvalidInput&) {
    return false;
  }
  const std::size_t t = cycle.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      if (k != i && k != (i + 1) % t && r.crosses_over(cycle[k], cycle[i])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int> reduce_witness(const CrossRelation& r, std::vector<int> cycle) {
  require_cycle(r, cycle);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t t = cycle.size();
    for (std::size_t i = 0; i < t && !changed; ++i) {
      for (std::size_t k = 0; k < t && !changed; ++k) {
        if (k == i || k == (i + 1) % t || !r.crosses_over(cycle[k], cycle[i])) {
          continue;
        }
        // f_i crosses under f_k: everything strictly between them along the
        // sequence can go.
        if (k > i) {
          cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), cycle.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
          cycle = std::vector<int>(cycle.begin() + static_cast<std::ptrdiff_t>(k),
                                   cycle.begin() + static_cast<std::ptrdiff_t>(i + 1));
        }
        changed = true;
      }
    }
  }
  std::ranges::rotate(cycle, std::ranges::min_element(cycle));
  return cycle;
}

namespace {

class CycleFinder {
 public:
  explicit CycleFinder(const CrossRelation& r)
      : relation_(r), state_(static_cast<std::size_t>(r.fragment_count()), State::unseen) {}

  /// A cycle along over-pairs, f_0 over f_1 over ... over f_0, or empty.
  std::vector<int> find() {
    for (int root = 0; root < relation_.fragment_count(); ++root) {
      if (state_[static_cast<std::size_t>(root)] == State::unseen && visit(root)) {
        return cycle_;
      }
    }
    return {};
  }

 private:
  enum class State { unseen, active, done };

  bool visit(int f) {
    state_[static_cast<std::size_t>(f)] = State::active;
    path_.push_back(f);
    for (int g : relation_.over(f)) {
      if (state_[static_cast<std::size_t>(g)] == State::active) {
        cycle_.assign(std::ranges::find(path_, g), path_.end());
        return true;
      }
      if (state_[static_cast<std::size_t>(g)] == State::unseen && visit(g)) {
        return true;
      }
    }
    path_.pop_back();
    state_[static_cast<std::size_t>(f)] = State::done;
    return false;
  }

  const CrossRelation& relation_;
  std::vector<State> state_;
  std::vector<int> path_;
  std::vector<int> cycle_;
};

}  // namespace

LayeringOutcome level_partition_from_crossings(const CrossRelation& r) {
  std::vector<int> over_cycle = CycleFinder(r).find();
  if (!over_cycle.empty()) {
    // Along over-pairs each member crosses under its predecessor, so the
    // reversed sequence crosses under its successor.
    std::ranges::reverse(over_cycle);
    return CrossingCycle{reduce_witness(r, std::move(over_cycle))};
  }

  // Acyclic: level = 1 + highest level crossed over, by memoized recursion.
  const auto m = static_cast<std::size_t>(r.fragment_count());
  std::vector<int> level(m, 0);
  const auto depth = [&](auto& self, int f) -> int {
    int& slot = level[static_cast<std::size_t>(f)];
    if (slot == 0) {
      int below = 0;
      for (int g : r.over(f)) {
        below = std::max(below, self(self, g));
      }
      slot = below + 1;
    }
    return slot;
  };
  for (int f = 0; f < r.fragment_count(); ++f) {
    depth(depth, f);
  }
  return LevelPartition{std::move(level)};
}

}  // namespace levelnum
