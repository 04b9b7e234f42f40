#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace levelnum {

/// Abstract crosses-over relation between m fragments: (i, j) means i
/// crosses over j. Irreflexive, and never both (i, j) and (j, i).
class CrossRelation {
 public:
  CrossRelation() = default;
  /// Throws InvalidInput on an index out of range, a self pair or a mutual
  /// pair. Duplicate pairs are merged.
  CrossRelation(int fragment_count, std::vector<std::pair<int, int>> over);

  int fragment_count() const noexcept { return count_; }
  const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
  /// Fragments that `i` crosses over, ascending.
  const std::vector<int>& over(int i) const { return over_[static_cast<std::size_t>(i)]; }
  bool crosses_over(int i, int j) const;

 private:
  int count_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> over_;
};

/// levels[f] in 1..n for every fragment.
struct LevelPartition {
  std::vector<int> levels;
};

/// Cyclic sequence f_1, ..., f_t where each f_i crosses under f_{i+1}
/// (indices mod t).
struct CrossingCycle {
  std::vector<int> fragments;
};

using LayeringOutcome = std::variant<LevelPartition, CrossingCycle>;

/// Longest-path layering when the relation is acyclic; otherwise a reduced
/// witness cycle found by depth-first search from the lowest fragment index.
LayeringOutcome level_partition_from_crossings(const CrossRelation& r);

/// Shortcuts a cyclic under-crossing sequence until each member crosses
/// under no listed member except its successor. Throws InvalidInput if the
/// input is not such a sequence.
std::vector<int> reduce_witness(const CrossRelation& r, std::vector<int> cycle);

/// Whether `cycle` is a cyclic under-crossing sequence of distinct
/// fragments in which no member crosses under a listed member other than its
/// successor.
bool is_consecutive_only(const CrossRelation& r, const std::vector<int>& cycle);

}  // namespace levelnum
