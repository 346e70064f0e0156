#pragma once

#include <string>

#include "steiner/embedded_tree.hpp"

namespace steiner {

// SVG 1.1 renderings with a deterministic layout: coordinates are used
// directly (y flipped for screen orientation) and the viewBox is the
// bounding box plus a 5% margin.  Terminals are filled dots, Steiner
// points hollow.
std::string render_tree_svg(const EmbeddedTree& tree);
std::string render_path_svg(const PolyPath& path);

}  // namespace steiner
