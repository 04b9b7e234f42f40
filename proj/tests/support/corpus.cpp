#include "corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace levelnum::testing {

namespace {

std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  return adj;
}

std::uint64_t code_for(const std::vector<std::uint32_t>& adj, const std::vector<int>& label) {
  std::uint64_t code = 0;
  const std::size_t n = label.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      code = (code << 1) | ((adj[static_cast<std::size_t>(label[i])] >> label[j]) & 1u);
    }
  }
  return code;
}

// Walks every labeling that permutes vertices only inside blocks of equal
// degree.
void permute_blocks(const std::vector<std::uint32_t>& adj, std::vector<int>& label,
                    const std::vector<std::pair<std::size_t, std::size_t>>& blocks, std::size_t block,
                    std::uint64_t& best) {
  if (block == blocks.size()) {
    best = std::max(best, code_for(adj, label));
    return;
  }
  const auto [begin, end] = blocks[block];
  std::sort(label.begin() + static_cast<std::ptrdiff_t>(begin), label.begin() + static_cast<std::ptrdiff_t>(end));
  do {
    permute_blocks(adj, label, blocks, block + 1, best);
  } while (std::next_permutation(label.begin() + static_cast<std::ptrdiff_t>(begin),
                                 label.begin() + static_cast<std::ptrdiff_t>(end)));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 11) {
    throw std::invalid_argument("canonical_code supports at most 11 vertices");
  }
  const auto adj = masks(g);
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::stable_sort(label.begin(), label.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < label.size();) {
    std::size_t j = i;
    while (j < label.size() && g.degree(label[j]) == g.degree(label[i])) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  permute_blocks(adj, label, blocks, 0, best);
  return best;
}

namespace {

std::vector<Graph> extend(const std::vector<Graph>& previous, int n) {
  std::map<std::pair<std::size_t, std::uint64_t>, Graph> found;
  for (const Graph& smaller : previous) {
    for (std::uint32_t subset = 1; subset < (1u << (n - 1)); ++subset) {
      std::vector<Edge> edges(smaller.edges().begin(), smaller.edges().end());
      for (int v = 0; v < n - 1; ++v) {
        if ((subset >> v) & 1u) {
          edges.emplace_back(v, n - 1);
        }
      }
      Graph g(n, edges);
      const std::pair key{g.edge_count(), canonical_code(g)};
      found.try_emplace(key, std::move(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) {
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> connected_graphs_exactly(int n) {
  if (n < 1) {
    return {};
  }
  std::vector<Graph> level{Graph(1, std::vector<Edge>{})};
  for (int k = 2; k <= n; ++k) {
    level = extend(level, k);
  }
  return level;
}

std::vector<Graph> connected_graphs(int max_vertices) {
  std::vector<Graph> out;
  std::vector<Graph> level;
  for (int n = 1; n <= max_vertices; ++n) {
    level = n == 1 ? std::vector<Graph>{Graph(1, std::vector<Edge>{})} : extend(level, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace levelnum::testing
