#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "levelnum/coloring.hpp"
#include "levelnum/graph.hpp"
#include "levelnum/spine.hpp"

namespace levelnum {

/// A non-negative level count or infinity. Infinity orders above every
/// finite value.
class LevelValue {
 public:
  constexpr LevelValue() = default;
  constexpr explicit LevelValue(int levels) : levels_(levels) {}
  static constexpr LevelValue infinite() {
    LevelValue v;
    v.levels_ = kInfinite;
    return v;
  }

  constexpr bool is_infinite() const noexcept { return levels_ == kInfinite; }
  constexpr bool is_finite() const noexcept { return !is_infinite(); }
  /// Only meaningful for finite values.
  constexpr int get() const noexcept { return levels_; }

  friend constexpr auto operator<=>(const LevelValue&, const LevelValue&) = default;
  friend constexpr bool operator==(const LevelValue&, const LevelValue&) = default;

 private:
  static constexpr int kInfinite = 1 << 30;
  int levels_ = 0;
};

/// "inf" or the decimal count.
std::string to_string(LevelValue value);

enum class Exactness { exact, upper_bound };

/// Spine plus one level (1..k) per fragment, fragments indexed as returned
/// by fragments(g, spine).
struct LevelCertificate {
  Spine spine;
  std::vector<int> levels;
  int k = 0;

  friend bool operator==(const LevelCertificate&, const LevelCertificate&) = default;
};

struct LevelResult {
  LevelValue value = LevelValue::infinite();
  std::optional<LevelCertificate> certificate;
  Exactness exactness = Exactness::exact;
};

struct SolveOptions {
  /// Maximum number of cycles level_number looks at. Hitting it downgrades
  /// the result to an upper bound. Hamiltonian enumeration ignores it.
  std::optional<std::size_t> cycle_cap;
  /// Spines are evaluated in parallel batches; results do not depend on it.
  unsigned workers = 1;
  DiskTest disk_test = DiskTest::with_spine;
};

/// Chromatic number and an optimal coloring of the conflict graph.
Coloring chromatic_number(const ConflictGraph& cg);

/// Minimum number of levels with `spine` as the spine. Infinite when some
/// fragment does not fit in a disk. The conflict-graph coloring is accepted
/// only after every level class passes jointly_disk_embeddable; otherwise an
/// exact partition search takes over. Throws InvalidInput if the spine is
/// not a cycle of g.
LevelResult spine_level_number(const Graph& g, const Spine& spine, const SolveOptions& options = {});

/// Minimum of spine_level_number over hamiltonian spines; infinite when g is
/// not hamiltonian. Always exact. Throws InvalidInput on disconnected input.
LevelResult hamiltonian_level_number(const Graph& g, const SolveOptions& options = {});

/// Minimum of spine_level_number over all cycles (subject to the cap).
/// Throws InvalidInput on disconnected input.
LevelResult level_number(const Graph& g, const SolveOptions& options = {});

struct LeveledDecision {
  bool answer = false;
  std::optional<Spine> witness;
};

/// First cycle (canonical order) whose fragments all pass the disk test.
LeveledDecision has_leveled_embedding(const Graph& g, DiskTest test = DiskTest::with_spine);

/// Reads the levels of `cert` as a stacking order and pushes every fragment
/// down to one above the highest conflicting fragment stacked below it.
/// Throws InvalidInput if the levels are not a proper coloring of `cg`.
LevelCertificate relayer(const LevelCertificate& cert, const ConflictGraph& cg);

/// Cross-check oracle: minimum number of blocks over all set partitions of
/// the fragments where every block is jointly disk embeddable. Ignores the
/// conflict relation entirely. Throws SizeLimitExceeded above
/// `fragment_limit` fragments.
LevelValue brute_force_min_levels(const Graph& g, const Spine& spine, std::size_t fragment_limit = 12);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Re-derives the fragments from g and the spine and checks that the levels
/// are a proper coloring of the conflict relation, every level class fits in
/// one disk, and the partition is divided in levels (a level-i fragment,
/// i > 1, conflicts with some level-(i-1) fragment).
CertificateCheck verify_certificate(const Graph& g, const LevelCertificate& cert);

}  // namespace levelnum
