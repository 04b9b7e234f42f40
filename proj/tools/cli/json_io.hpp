#pragma once

#include <string>

#include "json.hpp"
#include "levelnum/crossings.hpp"
#include "levelnum/graph.hpp"
#include "levelnum/invariants.hpp"
#include "levelnum/leveling.hpp"

namespace levelnum::cli {

using Json = nlohmann::ordered_json;

/// {"source": ..., "vertex_count": n, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g, const std::string& source);
/// Reads the "vertex_count"/"edges" members written by graph_to_json.
Graph graph_from_json(const Json& input);

/// {"spine": [...], "fragments": [{"attachments": [...], "internal_vertices": [...]}], "levels": [...]}
/// Attachments are positions along the spine as listed in "spine".
Json certificate_to_json(const Graph& g, const LevelCertificate& cert);
/// Parses the spine and levels. The fragment list is informational; the
/// verifier recomputes fragments from the graph.
LevelCertificate certificate_from_json(const Json& cert);

/// Integer, or the string "inf".
Json level_value_to_json(LevelValue value);

/// Either a bare list of [over, under] pairs, or
/// {"fragments": m, "over": [[over, under], ...]}.
CrossRelation relation_from_json(const Json& input);
Json relation_to_json(const CrossRelation& r);

Json report_to_json(const InvariantReport& report, bool with_timings);

}  // namespace levelnum::cli
