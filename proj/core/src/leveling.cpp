#include "levelnum/leveling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "levelnum/errors.hpp"
#include "parallel.hpp"

namespace levelnum {

std::string to_string(LevelValue value) {
  return value.is_infinite() ? std::string("inf") : std::to_string(value.get());
}

Coloring chromatic_number(const ConflictGraph& cg) { return exact_coloring(cg.adjacency); }

LevelCertificate relayer(const LevelCertificate& cert, const ConflictGraph& cg) {
  const std::size_t m = cg.fragments.size();
  if (cert.levels.size() != m) {
    throw InvalidInput("certificate has " + std::to_string(cert.levels.size()) + " levels for " +
                       std::to_string(m) + " fragments");
  }
  if (!is_proper_coloring(cg.adjacency, cert.levels)) {
    throw InvalidInput("levels are not a proper coloring of the conflict graph");
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return cert.levels[a] < cert.levels[b]; });

  LevelCertificate out{cert.spine, std::vector<int>(m, 0), 0};
  for (std::size_t f : order) {
    int below = 0;
    for (Vertex h : cg.adjacency.neighbors(static_cast<Vertex>(f))) {
      if (cert.levels[static_cast<std::size_t>(h)] < cert.levels[f]) {
        below = std::max(below, out.levels[static_cast<std::size_t>(h)]);
      }
    }
    out.levels[f] = below + 1;
    out.k = std::max(out.k, below + 1);
  }
  return out;
}

namespace {

bool classes_embeddable(const ConflictGraph& cg, const LevelCertificate& cert) {
  std::vector<std::vector<const Fragment*>> classes(static_cast<std::size_t>(cert.k));
  for (std::size_t f = 0; f < cert.levels.size(); ++f) {
    classes[static_cast<std::size_t>(cert.levels[f] - 1)].push_back(&cg.fragments[f]);
  }
  return std::ranges::all_of(classes, [&](const auto& members) {
    return jointly_disk_embeddable(members, cert.spine);
  });
}

// Exact search over partitions into the fewest classes such that each class
// is conflict-free and jointly disk embeddable, accepting a partition only if
// its relayered form still passes. Tries k = first, first+1, ... while
// k < limit.
class PartitionSearch {
 public:
  PartitionSearch(const ConflictGraph& cg, const Spine& spine) : cg_(cg), spine_(spine) {}

  std::optional<LevelCertificate> run(int first, int limit) {
    const int m = static_cast<int>(cg_.fragments.size());
    for (int k = std::max(first, 1); k < limit && k <= m; ++k) {
      k_ = k;
      classes_.assign(static_cast<std::size_t>(k), {});
      assignment_.assign(static_cast<std::size_t>(m), 0);
      found_.reset();
      if (place(0, 0)) {
        return found_;
      }
    }
    return std::nullopt;
  }

 private:
  bool place(std::size_t f, int used) {
    if (f == cg_.fragments.size()) {
      LevelCertificate cert{spine_, assignment_, used};
      LevelCertificate relayered = relayer(cert, cg_);
      if (classes_embeddable(cg_, relayered)) {
        found_ = std::move(relayered);
        return true;
      }
      return false;
    }
    const int open = std::min(used + 1, k_);
    for (int c = 0; c < open; ++c) {
      auto& members = classes_[static_cast<std::size_t>(c)];
      const bool clash = std::ranges::any_of(members, [&](const Fragment* other) {
        const auto idx = static_cast<Vertex>(other - cg_.fragments.data());
        return cg_.adjacency.has_edge(idx, static_cast<Vertex>(f));
      });
      if (clash) {
        continue;
      }
      members.push_back(&cg_.fragments[f]);
      if (jointly_disk_embeddable(members, spine_)) {
        assignment_[f] = c + 1;
        if (place(f + 1, std::max(used, c + 1))) {
          return true;
        }
      }
      members.pop_back();
    }
    return false;
  }

  const ConflictGraph& cg_;
  const Spine& spine_;
  int k_ = 0;
  std::vector<std::vector<const Fragment*>> classes_;
  std::vector<int> assignment_;
  std::optional<LevelCertificate> found_;
};

enum class SpineOutcome { solved, inadmissible, pruned };

struct SpineEvaluation {
  SpineOutcome outcome = SpineOutcome::inadmissible;
  LevelResult result;
};

// Fixed-spine level number. With a bound, gives up (pruned) as soon as it is
// clear the spine cannot beat `bound` levels.
SpineEvaluation evaluate_spine(const Graph& g, const Spine& spine, DiskTest test, std::optional<int> bound) {
  SpineEvaluation eval;
  std::vector<Fragment> frags = fragments(g, spine);
  if (frags.empty()) {
    if (bound && *bound <= 0) {
      eval.outcome = SpineOutcome::pruned;
      return eval;
    }
    eval.outcome = SpineOutcome::solved;
    eval.result = LevelResult{LevelValue(0), LevelCertificate{spine, {}, 0}, Exactness::exact};
    return eval;
  }
  for (const Fragment& f : frags) {
    if (!fragment_disk_embeddable(f, spine, test)) {
      return eval;
    }
  }
  const ConflictGraph cg = conflict_graph(std::move(frags), spine);
  const int limit = bound.value_or(static_cast<int>(cg.fragments.size()) + 1);

  std::optional<Coloring> coloring = exact_coloring_below(cg.adjacency, limit);
  if (!coloring) {
    eval.outcome = SpineOutcome::pruned;
    return eval;
  }
  std::vector<int> levels(coloring->color_of.size());
  std::ranges::transform(coloring->color_of, levels.begin(), [](int c) { return c + 1; });
  LevelCertificate cert = relayer(LevelCertificate{spine, std::move(levels), coloring->colors}, cg);

  if (!classes_embeddable(cg, cert)) {
    std::optional<LevelCertificate> fallback = PartitionSearch(cg, spine).run(coloring->colors, limit);
    if (!fallback) {
      // Without a bound every singleton partition is tried, so failure means
      // some fragment does not fit into a disk by itself.
      eval.outcome = bound ? SpineOutcome::pruned : SpineOutcome::inadmissible;
      return eval;
    }
    cert = std::move(*fallback);
  }
  eval.outcome = SpineOutcome::solved;
  eval.result = LevelResult{LevelValue(cert.k), std::move(cert), Exactness::exact};
  return eval;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw InvalidInput("graph must be connected");
  }
}

// Evaluates spines in fixed-size batches, in canonical order, keeping the
// first spine that reaches the running minimum. A spine is pruned only when
// it cannot be strictly better than a spine that precedes it, so the winner
// does not depend on batch boundaries or on the worker count.
class SpineMinimizer {
 public:
  SpineMinimizer(const Graph& g, const SolveOptions& options)
      : graph_(g), options_(options), batch_size_(16 * std::max(1u, options.workers)) {}

  /// Returns false once no later spine can improve the minimum.
  bool offer(const Spine& spine) {
    batch_.push_back(spine);
    if (batch_.size() >= batch_size_) {
      flush();
    }
    return !settled();
  }

  void flush() {
    if (batch_.empty()) {
      return;
    }
    std::vector<SpineEvaluation> evals(batch_.size());
    const std::optional<int> bound = best_ ? std::optional<int>(best_->second) : std::nullopt;
    detail::parallel_for(batch_.size(), options_.workers, [&](std::size_t i) {
      evals[i] = evaluate_spine(graph_, batch_[i], options_.disk_test, bound);
    });
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      if (evals[i].outcome != SpineOutcome::solved) {
        continue;
      }
      const int value = evals[i].result.value.get();
      if (!best_ || value < best_->second) {
        best_ = {batch_[i], value};
      }
    }
    batch_.clear();
  }

  /// Minimum found so far, with the certificate recomputed without a bound so
  /// it is identical however the search was scheduled.
  LevelResult result(Exactness exactness) {
    flush();
    if (!best_) {
      return LevelResult{LevelValue::infinite(), std::nullopt, exactness};
    }
    LevelResult out = evaluate_spine(graph_, best_->first, options_.disk_test, std::nullopt).result;
    out.exactness = exactness;
    return out;
  }

  bool settled() const {
    if (!best_) {
      return false;
    }
    // Zero levels needs a spine without fragments, which only a cycle graph
    // has; otherwise one level is the floor.
    return best_->second == 0 || (best_->second == 1 && !is_cycle_graph(graph_));
  }

 private:
  const Graph& graph_;
  const SolveOptions& options_;
  std::size_t batch_size_;
  std::vector<Spine> batch_;
  std::optional<std::pair<Spine, int>> best_;
};

}  // namespace

LevelResult spine_level_number(const Graph& g, const Spine& spine, const SolveOptions& options) {
  SpineEvaluation eval = evaluate_spine(g, spine, options.disk_test, std::nullopt);
  if (eval.outcome != SpineOutcome::solved) {
    return LevelResult{LevelValue::infinite(), std::nullopt, Exactness::exact};
  }
  return std::move(eval.result);
}

LevelResult hamiltonian_level_number(const Graph& g, const SolveOptions& options) {
  require_connected(g);
  SpineMinimizer minimizer(g, options);
  enumerate_hamiltonian_cycles(g, [&](const Spine& s) { return minimizer.offer(s); });
  return minimizer.result(Exactness::exact);
}

LevelResult level_number(const Graph& g, const SolveOptions& options) {
  require_connected(g);
  SpineMinimizer minimizer(g, options);
  const EnumerationStatus status =
      enumerate_cycles(g, [&](const Spine& s) { return minimizer.offer(s); }, options.cycle_cap);
  minimizer.flush();
  const bool exact = !status.truncated || minimizer.settled();
  return minimizer.result(exact ? Exactness::exact : Exactness::upper_bound);
}

LeveledDecision has_leveled_embedding(const Graph& g, DiskTest test) {
  require_connected(g);
  LeveledDecision decision;
  enumerate_cycles(g, [&](const Spine& s) {
    const auto frags = fragments(g, s);
    const bool all_fit =
        std::ranges::all_of(frags, [&](const Fragment& f) { return fragment_disk_embeddable(f, s, test); });
    if (all_fit) {
      decision.answer = true;
      decision.witness = s;
      return false;
    }
    return true;
  });
  return decision;
}

namespace {

// Minimum block count over set partitions, blocks grown one fragment at a
// time. A block that is not jointly embeddable cannot become so by adding
// fragments (subgraphs of planar graphs are planar), which justifies pruning
// a partial partition as soon as one block fails.
class PartitionOracle {
 public:
  PartitionOracle(const std::vector<Fragment>& frags, const Spine& spine) : frags_(frags), spine_(spine) {}

  int minimum() {
    best_ = static_cast<int>(frags_.size());
    blocks_.clear();
    expand(0);
    return best_;
  }

 private:
  bool valid(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) {
      return it->second;
    }
    std::vector<const Fragment*> members;
    for (std::size_t i = 0; i < frags_.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        members.push_back(&frags_[i]);
      }
    }
    const bool ok = jointly_disk_embeddable(members, spine_);
    memo_.emplace(mask, ok);
    return ok;
  }

  void expand(std::size_t f) {
    if (static_cast<int>(blocks_.size()) >= best_) {
      return;
    }
    if (f == frags_.size()) {
      best_ = static_cast<int>(blocks_.size());
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << f;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (valid(blocks_[b] | bit)) {
        blocks_[b] |= bit;
        expand(f + 1);
        blocks_[b] &= ~bit;
      }
    }
    blocks_.push_back(bit);
    expand(f + 1);
    blocks_.pop_back();
  }

  const std::vector<Fragment>& frags_;
  const Spine& spine_;
  int best_ = 0;
  std::vector<std::uint32_t> blocks_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

}  // namespace

LevelValue brute_force_min_levels(const Graph& g, const Spine& spine, std::size_t fragment_limit) {
  const std::vector<Fragment> frags = fragments(g, spine);
  if (frags.size() > fragment_limit || frags.size() > 31) {
    throw SizeLimitExceeded("brute-force oracle limited to " + std::to_string(std::min<std::size_t>(fragment_limit, 31)) +
                            " fragments, spine has " + std::to_string(frags.size()));
  }
  for (const Fragment& f : frags) {
    if (!jointly_disk_embeddable(std::span<const Fragment>(&f, 1), spine)) {
      return LevelValue::infinite();
    }
  }
  return LevelValue(PartitionOracle(frags, spine).minimum());
}

CertificateCheck verify_certificate(const Graph& g, const LevelCertificate& cert) {
  const auto fail = [](std::string reason) { return CertificateCheck{false, std::move(reason)}; };
  if (!is_cycle_of(g, cert.spine)) {
    return fail("spine is not a cycle of the graph");
  }
  const std::vector<Fragment> frags = fragments(g, cert.spine);
  if (cert.levels.size() != frags.size()) {
    return fail("expected " + std::to_string(frags.size()) + " levels, got " + std::to_string(cert.levels.size()));
  }
  const int top = cert.levels.empty() ? 0 : *std::ranges::max_element(cert.levels);
  if (top != cert.k) {
    return fail("k = " + std::to_string(cert.k) + " but highest level is " + std::to_string(top));
  }
  std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(cert.k) + 1);
  for (std::size_t i = 0; i < frags.size(); ++i) {
    if (cert.levels[i] < 1) {
      return fail("fragment " + std::to_string(i) + " has level " + std::to_string(cert.levels[i]));
    }
    classes[static_cast<std::size_t>(cert.levels[i])].push_back(i);
  }
  for (int level = 1; level <= cert.k; ++level) {
    if (classes[static_cast<std::size_t>(level)].empty()) {
      return fail("level " + std::to_string(level) + " is empty");
    }
  }

  std::vector<std::vector<char>> conflict(frags.size(), std::vector<char>(frags.size(), 0));
  for (std::size_t i = 0; i < frags.size(); ++i) {
    for (std::size_t j = i + 1; j < frags.size(); ++j) {
      if (conflicts(frags[i], frags[j], cert.spine)) {
        if (cert.levels[i] == cert.levels[j]) {
          return fail("conflicting fragments " + std::to_string(i) + " and " + std::to_string(j) +
                      " share level " + std::to_string(cert.levels[i]));
        }
        conflict[i][j] = conflict[j][i] = 1;
      }
    }
  }

  for (int level = 1; level <= cert.k; ++level) {
    std::vector<const Fragment*> members;
    for (std::size_t i : classes[static_cast<std::size_t>(level)]) {
      members.push_back(&frags[i]);
    }
    if (!jointly_disk_embeddable(members, cert.spine)) {
      return fail("level " + std::to_string(level) + " does not fit into one disk");
    }
  }

  // Stacked by level, fragment i crosses over j iff they conflict and i sits
  // higher. Level 1 then never crosses over anything; a level-i fragment
  // must cross over some level-(i-1) fragment.
  for (std::size_t i = 0; i < frags.size(); ++i) {
    const int level = cert.levels[i];
    if (level == 1) {
      continue;
    }
    bool supported = false;
    for (std::size_t j : classes[static_cast<std::size_t>(level - 1)]) {
      supported = supported || conflict[i][j];
    }
    if (!supported) {
      return fail("fragment " + std::to_string(i) + " on level " + std::to_string(level) +
                  " crosses over nothing on level " + std::to_string(level - 1));
    }
  }
  return CertificateCheck{true, {}};
}

}  // namespace levelnum
