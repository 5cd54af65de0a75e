#pragma once

#include <optional>
#include <string>

#include "gcon/json_io.hpp"
#include "gcon/stairs.hpp"

namespace gcon {

/// Text grid over the bounding box of the stair. Rows run by decreasing y,
/// columns by increasing x; a box is printed as [r], an empty cell as
/// blanks of the same width. Labels wider than one digit widen every cell.
/// Each line is right-trimmed and ends with '\n'.
std::string render_ascii(const RealizedStair& stair);

/// One unit square per box, in stair order, each followed by its centered
/// label. The viewBox is the bounding box of the stair.
std::string render_svg(const RealizedStair& stair);

/// The figure of a drawable document: a stair at its default anchor, a
/// realized stair, or a realized chamber stair.
std::optional<RealizedStair> figure_of(const Document& doc);

}  // namespace gcon
