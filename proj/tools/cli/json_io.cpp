#include "json_io.hpp"

#include "levelnum/errors.hpp"

namespace levelnum::cli {

namespace {

const Json& member(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw InvalidInput(std::string("missing JSON member '") + key + "'");
  }
  return object.at(key);
}

std::vector<int> int_list(const Json& value, const char* what) {
  if (!value.is_array()) {
    throw InvalidInput(std::string(what) + " must be a list of integers");
  }
  std::vector<int> out;
  for (const Json& item : value) {
    if (!item.is_number_integer()) {
      throw InvalidInput(std::string(what) + " must be a list of integers");
    }
    out.push_back(item.get<int>());
  }
  return out;
}

std::vector<std::pair<int, int>> pair_list(const Json& value) {
  if (!value.is_array()) {
    throw InvalidInput("expected a list of [a, b] pairs");
  }
  std::vector<std::pair<int, int>> out;
  for (const Json& item : value) {
    const std::vector<int> pair = int_list(item, "pair");
    if (pair.size() != 2) {
      throw InvalidInput("expected a list of [a, b] pairs");
    }
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

Json field_json(const Field<int>& field, bool with_timings) {
  Json out = Json::object();
  if (field.value) {
    out["value"] = *field.value;
  } else {
    out["skipped"] = field.skipped_reason;
  }
  if (with_timings) {
    out["seconds"] = field.seconds;
  }
  return out;
}

Json field_json(const Field<LevelResult>& field, bool with_timings) {
  Json out = Json::object();
  if (field.value) {
    out["value"] = level_value_to_json(field.value->value);
    out["exact"] = field.value->exactness == Exactness::exact;
  } else {
    out["skipped"] = field.skipped_reason;
  }
  if (with_timings) {
    out["seconds"] = field.seconds;
  }
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g, const std::string& source) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v});
  }
  return Json{{"source", source}, {"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& input) {
  const Json& count = member(input, "vertex_count");
  if (!count.is_number_integer()) {
    throw InvalidInput("vertex_count must be an integer");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : pair_list(member(input, "edges"))) {
    edges.emplace_back(u, v);
  }
  return Graph(count.get<int>(), edges);
}

Json level_value_to_json(LevelValue value) {
  return value.is_infinite() ? Json("inf") : Json(value.get());
}

Json certificate_to_json(const Graph& g, const LevelCertificate& cert) {
  Json frags = Json::array();
  for (const Fragment& f : fragments(g, cert.spine)) {
    frags.push_back(Json{{"attachments", f.attachments}, {"internal_vertices", f.internal_vertices}});
  }
  const std::vector<Vertex> spine(cert.spine.vertices().begin(), cert.spine.vertices().end());
  return Json{{"spine", spine}, {"fragments", std::move(frags)}, {"levels", cert.levels}};
}

LevelCertificate certificate_from_json(const Json& cert) {
  LevelCertificate out;
  out.spine = Spine(int_list(member(cert, "spine"), "spine"));
  out.levels = int_list(member(cert, "levels"), "levels");
  out.k = 0;
  for (int level : out.levels) {
    out.k = std::max(out.k, level);
  }
  return out;
}

CrossRelation relation_from_json(const Json& input) {
  if (input.is_array()) {
    const auto pairs = pair_list(input);
    int count = 0;
    for (const auto& [a, b] : pairs) {
      count = std::max({count, a + 1, b + 1});
    }
    return CrossRelation(count, pairs);
  }
  const Json& count = member(input, "fragments");
  if (!count.is_number_integer()) {
    throw InvalidInput("fragments must be an integer");
  }
  return CrossRelation(count.get<int>(), pair_list(member(input, "over")));
}

Json relation_to_json(const CrossRelation& r) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs()) {
    pairs.push_back({a, b});
  }
  return Json{{"fragments", r.fragment_count()}, {"over", std::move(pairs)}};
}

Json report_to_json(const InvariantReport& report, bool with_timings) {
  Json checks = Json::array();
  for (const InequalityCheck& c : report.checks()) {
    checks.push_back(Json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"status", to_string(c.status)}});
  }
  return Json{{"level", field_json(report.level, with_timings)},
              {"hamiltonian_level", field_json(report.hamiltonian_level, with_timings)},
              {"book_thickness", field_json(report.book_thickness, with_timings)},
              {"thickness", field_json(report.thickness, with_timings)},
              {"checks", std::move(checks)},
              {"all_pass", report.all_pass()}};
}

}  // namespace levelnum::cli
