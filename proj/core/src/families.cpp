#include <charconv>

#include "levelnum/errors.hpp"
#include "levelnum/graph.hpp"

namespace levelnum {

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end || value <= 0) {
    throw InvalidInput("unknown graph family '" + std::string(whole) + "'");
  }
  return value;
}

void validate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete:
      if (spec.first < 1) throw InvalidInput("complete graph needs at least one vertex");
      break;
    case Family::complete_bipartite:
      if (spec.first < 1 || spec.second < 1) throw InvalidInput("complete bipartite parts must be non-empty");
      break;
    case Family::cycle:
      if (spec.first < 3) throw InvalidInput("cycle needs at least 3 vertices");
      break;
    case Family::path:
      if (spec.first < 1) throw InvalidInput("path needs at least one vertex");
      break;
    case Family::moebius_ladder:
      if (spec.first < 4 || spec.first % 2 != 0) {
        throw InvalidInput("moebius ladder size must be even and at least 4");
      }
      break;
  }
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  if (text.size() < 2) {
    throw InvalidInput("unknown graph family '" + std::string(text) + "'");
  }
  const std::string_view rest = text.substr(1);
  FamilySpec spec;
  switch (text.front()) {
    case 'K': {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) {
        spec = {Family::complete, parse_positive(rest, text), 0};
      } else {
        spec = {Family::complete_bipartite, parse_positive(rest.substr(0, comma), text),
                parse_positive(rest.substr(comma + 1), text)};
      }
      break;
    }
    case 'C':
      spec = {Family::cycle, parse_positive(rest, text), 0};
      break;
    case 'P':
      spec = {Family::path, parse_positive(rest, text), 0};
      break;
    case 'M':
      spec = {Family::moebius_ladder, parse_positive(rest, text), 0};
      break;
    default:
      throw InvalidInput("unknown graph family '" + std::string(text) + "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete:
      return "K" + std::to_string(spec.first);
    case Family::complete_bipartite:
      return "K" + std::to_string(spec.first) + "," + std::to_string(spec.second);
    case Family::cycle:
      return "C" + std::to_string(spec.first);
    case Family::path:
      return "P" + std::to_string(spec.first);
    case Family::moebius_ladder:
      return "M" + std::to_string(spec.first);
  }
  return {};
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  std::vector<Edge> edges;
  const int n = spec.first;
  switch (spec.family) {
    case Family::complete:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          edges.emplace_back(u, v);
        }
      }
      return Graph(n, edges);
    case Family::complete_bipartite: {
      const int m = spec.first;
      const int k = spec.second;
      for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = m; v < m + k; ++v) {
          edges.emplace_back(u, v);
        }
      }
      return Graph(m + k, edges);
    }
    case Family::cycle:
      for (Vertex u = 0; u < n; ++u) {
        edges.emplace_back(u, (u + 1) % n);
      }
      return Graph(n, edges);
    case Family::path:
      for (Vertex u = 0; u + 1 < n; ++u) {
        edges.emplace_back(u, u + 1);
      }
      return Graph(n, edges);
    case Family::moebius_ladder: {
      const int half = n / 2;
      for (Vertex u = 0; u < n; ++u) {
        edges.emplace_back(u, (u + 1) % n);
      }
      for (Vertex u = 0; u < half; ++u) {
        edges.emplace_back(u, u + half);
      }
      return Graph(n, edges);
    }
  }
  throw InvalidInput("unsupported family");
}

}  // namespace levelnum
