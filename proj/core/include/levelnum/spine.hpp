#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "levelnum/graph.hpp"

namespace levelnum {

/// A cyclic vertex sequence kept in canonical form: rotated so the smallest
/// vertex comes first, then oriented so the second entry is smaller than the
/// last. Two spines describing the same cycle compare equal.
///
/// Spines are ordered by length first and lexicographically second; that
/// order is the tie-break for every minimization in the library.
class Spine {
 public:
  Spine() = default;

  /// Canonicalizes `cycle`. Throws InvalidInput when it has fewer than three
  /// entries, repeats a vertex or contains a negative id. Does not look at
  /// any graph; see make_spine for that.
  explicit Spine(std::vector<Vertex> cycle);

  std::size_t size() const noexcept { return sequence_.size(); }
  std::span<const Vertex> vertices() const noexcept { return sequence_; }
  Vertex at(int position) const { return sequence_[static_cast<std::size_t>(position)]; }

  bool contains(Vertex v) const noexcept;
  /// Position of `v` along the spine, or -1 when v is not on it.
  int position(Vertex v) const noexcept;

  friend bool operator==(const Spine& a, const Spine& b) { return a.sequence_ == b.sequence_; }
  friend std::strong_ordering operator<=>(const Spine& a, const Spine& b);

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> position_;
};

bool is_cycle_of(const Graph& g, const Spine& spine);

/// Canonical spine for `cycle`, rejecting sequences that are not a cycle of g.
Spine make_spine(const Graph& g, std::vector<Vertex> cycle);

/// Closure of one connected component of G - C, or a single chord of C.
struct Fragment {
  std::vector<Vertex> internal_vertices;  // sorted, disjoint from the spine
  std::vector<Edge> internal_edges;       // both ends internal
  std::vector<Edge> attachment_edges;     // one end on the spine (both for a chord)
  std::vector<int> attachments;           // sorted distinct spine positions

  bool is_chord() const noexcept { return internal_vertices.empty(); }

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// Graph on fragment indices; i ~ j iff fragments i and j conflict.
struct ConflictGraph {
  std::vector<Fragment> fragments;
  Graph adjacency;
};

/// Result of a bounded enumeration. `truncated` is set when the cap stopped
/// the enumeration while more items remained.
struct EnumerationStatus {
  std::size_t emitted = 0;
  bool truncated = false;
};

/// Return false from a visitor to stop early. Stopping early is not
/// truncation.
using SpineVisitor = std::function<bool(const Spine&)>;

/// Every cycle of g exactly once, canonical form, shortest first then
/// lexicographic. With a cap, at most `cap` cycles are emitted.
EnumerationStatus enumerate_cycles(const Graph& g, const SpineVisitor& visit,
                                   std::optional<std::size_t> cap = std::nullopt);

struct SpineList {
  std::vector<Spine> spines;
  bool truncated = false;
};
SpineList all_cycles(const Graph& g, std::optional<std::size_t> cap = std::nullopt);

/// Every hamiltonian cycle exactly once, canonical form, lexicographic.
EnumerationStatus enumerate_hamiltonian_cycles(const Graph& g, const SpineVisitor& visit);
std::vector<Spine> all_hamiltonian_cycles(const Graph& g);

/// Fragments of g with respect to the spine, ordered by attachment list, then
/// internal size, then internal vertices. Throws InvalidInput if the spine is
/// not a cycle of g.
std::vector<Fragment> fragments(const Graph& g, const Spine& spine);

/// True when there are a, b in `first` and x, y in `second`, four distinct
/// positions, met in the cyclic order a, x, b, y. Both lists hold sorted
/// positions on a cycle; the cycle length is irrelevant.
///
/// This is the single interleaving kernel shared by fragment conflicts and
/// book-embedding page constraints.
bool interleaves(std::span<const int> first, std::span<const int> second);

/// Attachments alternate around the spine or share at least three positions.
bool conflicts(const Fragment& f, const Fragment& h, const Spine& spine);

ConflictGraph conflict_graph(const Graph& g, const Spine& spine);
ConflictGraph conflict_graph(std::vector<Fragment> frags, const Spine& spine);

/// Which planarity condition decides whether a fragment fits into a disk.
enum class DiskTest {
  /// The spine cycle plus the fragment is planar. A single bridge lies on one
  /// side of C in any plane embedding, so this is exactly "embeds in a disk
  /// bounded by C with the attachment order fixed".
  with_spine,
  /// The fragment on its own is planar.
  fragment_only,
};

bool fragment_disk_embeddable(const Fragment& f, const Spine& spine, DiskTest test = DiskTest::with_spine);

/// All of `fs` fit together into one closed disk bounded by the spine:
/// spine plus fragments plus an apex on every spine vertex is planar.
bool jointly_disk_embeddable(std::span<const Fragment> fs, const Spine& spine);
bool jointly_disk_embeddable(std::span<const Fragment* const> fs, const Spine& spine);

}  // namespace levelnum
