#pragma once

#include <string>

#include "arrlab/statistics.hpp"

namespace arrlab {

/// Planar drawing: every line clipped to the vertex bounding box padded by
/// 20% on each side, bounded cells filled by a colour ramp indexed by
/// diameter, vertices as dots. Throws UnsupportedDimensionError unless d = 2.
std::string export_svg(const Analysis& analysis);

/// Fill colour used for cells of the given diameter.
std::string diameter_color(std::size_t diameter);

/// Object File Format text for one bounded cell of a 3-dimensional
/// arrangement: its vertices, then one polygon per facet (facets ordered by
/// hyperplane index, vertices counter-clockwise seen from outside). Throws
/// UnsupportedDimensionError unless d = 3 and InputError if the signature is
/// not a bounded cell.
std::string export_off(const Analysis& analysis, const CellSignature& cell);

}  // namespace arrlab
