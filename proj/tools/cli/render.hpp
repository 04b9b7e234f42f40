#pragma once

#include <string>

#include "levelnum/graph.hpp"
#include "levelnum/leveling.hpp"

namespace levelnum::cli {

/// Static drawing of a certificate: the spine on a circle, chords bent
/// towards the center, internal vertices pulled inside next to their
/// attachments, one stroke color per level. Coordinates are printed with
/// two decimals so the output is reproducible.
std::string render_svg(const Graph& g, const LevelCertificate& cert);

/// Same layout as render_svg as an undirected DOT graph with pinned
/// positions (for neato -n).
std::string render_dot(const Graph& g, const LevelCertificate& cert);

}  // namespace levelnum::cli
