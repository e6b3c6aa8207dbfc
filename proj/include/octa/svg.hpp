#pragma once

#include "octa/fold.hpp"
#include "octa/poly.hpp"

#include <optional>
#include <string>

namespace octa {

// Static SVG figure of a shape; with a fold map, every vertex occurrence is
// drawn as a glyph (shape per axis, fill per sign) in the style of the
// hand-drawn foldings.  Slit edges are drawn as gaps.
std::string render_svg(const Polyiamond& p, const std::optional<FoldMap>& map);

} // namespace octa
