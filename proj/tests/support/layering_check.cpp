#include "layering_check.hpp"

#include <algorithm>
#include <numeric>

#include "oracles.hpp"

namespace levelnum::testing {

namespace {

bool has_topological_order(const CrossRelation& r) {
  std::vector<int> order(static_cast<std::size_t>(r.fragment_count()));
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < order.size() && ok; ++j) {
        ok = !r.crosses_over(order[i], order[j]);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::string partition_violation(const CrossRelation& r, const std::vector<int>& levels) {
  if (levels.size() != static_cast<std::size_t>(r.fragment_count())) {
    return "partition has the wrong size";
  }
  const int top = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
  std::vector<int> per_level(static_cast<std::size_t>(top) + 1, 0);
  for (int level : levels) {
    if (level < 1) {
      return "level below 1";
    }
    ++per_level[static_cast<std::size_t>(level)];
  }
  for (int level = 1; level <= top; ++level) {
    if (per_level[static_cast<std::size_t>(level)] == 0) {
      return "empty level " + std::to_string(level);
    }
  }
  for (const auto& [over, under] : r.pairs()) {
    if (levels[static_cast<std::size_t>(over)] <= levels[static_cast<std::size_t>(under)]) {
      return "fragment " + std::to_string(over) + " crosses over a fragment at or above its level";
    }
  }
  for (int f = 0; f < r.fragment_count(); ++f) {
    const int level = levels[static_cast<std::size_t>(f)];
    const auto& below = r.over(f);
    if (level > 1 && std::none_of(below.begin(), below.end(), [&](int g) {
          return levels[static_cast<std::size_t>(g)] == level - 1;
        })) {
      return "fragment " + std::to_string(f) + " floats above level " + std::to_string(level - 1);
    }
  }
  if (top != longest_path_vertices(r)) {
    return "level count differs from the longest chain";
  }
  return {};
}

std::string witness_violation(const CrossRelation& r, const std::vector<int>& cycle) {
  const std::size_t t = cycle.size();
  if (t < 3) {
    return "witness shorter than three";
  }
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
      sorted.back() >= r.fragment_count()) {
    return "witness repeats a fragment or is out of range";
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      const bool under = r.crosses_over(cycle[k], cycle[i]);
      if (k == (i + 1) % t && !under) {
        return "witness member does not cross under its successor";
      }
      if (k != (i + 1) % t && under) {
        return "witness member crosses under a non-successor";
      }
    }
  }
  return {};
}

}  // namespace

std::string layering_violation(const CrossRelation& r, const LayeringOutcome& outcome) {
  const bool acyclic = has_topological_order(r);
  if (const auto* partition = std::get_if<LevelPartition>(&outcome)) {
    return acyclic ? partition_violation(r, partition->levels) : "partition returned for a cyclic relation";
  }
  return acyclic ? "witness returned for an acyclic relation"
                 : witness_violation(r, std::get<CrossingCycle>(outcome).fragments);
}

}  // namespace levelnum::testing
