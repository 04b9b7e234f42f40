#include "levelnum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "levelnum/errors.hpp"

namespace levelnum {

Graph::Graph(int vertex_count, std::span<const Edge> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw InvalidInput("negative vertex count");
  }
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= vertex_count) {
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") out of range for " + std::to_string(vertex_count) + " vertices");
    }
    edges_.push_back(e);
  }
  std::ranges::sort(edges_);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::ranges::sort(list);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
    return false;
  }
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::ranges::binary_search(list, b);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

bool parse_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) {
      stop = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() == 2 && tokens[0] == "n") {
      int count = 0;
      if (!parse_int(tokens[1], count) || count < 0) {
        throw ParseError(line_no, "invalid vertex count '" + std::string(tokens[1]) + "'");
      }
      declared = count;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got '" + std::string(line) + "'");
    }
    int u = 0;
    int v = 0;
    for (int k = 0; k < 2; ++k) {
      int& dst = k == 0 ? u : v;
      if (!parse_int(tokens[static_cast<std::size_t>(k)], dst) || dst < 0) {
        throw ParseError(line_no,
                         "not a non-negative integer: '" + std::string(tokens[static_cast<std::size_t>(k)]) + "'");
      }
    }
    if (u == v) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    }
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  if (declared >= 0 && max_id >= declared) {
    throw ParseError(line_no, "vertex " + std::to_string(max_id) + " exceeds declared count " +
                                  std::to_string(declared));
  }
  const int n = declared >= 0 ? declared : max_id + 1;
  return Graph(n, edges);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_cycle_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != static_cast<std::size_t>(n)) {
    return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) {
      return false;
    }
  }
  return is_connected(g);
}

Graph add_apex(const Graph& g, std::span<const Vertex> targets) {
  const int apex = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex t : targets) {
    if (t < 0 || t >= apex) {
      throw InvalidInput("apex target " + std::to_string(t) + " out of range");
    }
    edges.emplace_back(t, apex);
  }
  return Graph(apex + 1, edges);
}

Graph add_apex(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<Vertex>(i);
  }
  return add_apex(g, all);
}

bool is_outerplanar(const Graph& g) { return is_planar(add_apex(g)); }

}  // namespace levelnum
