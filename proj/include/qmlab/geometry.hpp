#pragma once

#include <vector>

#include "qmlab/grid.hpp"

namespace qmlab {

// Domain point at normalized coordinates (u, v) of the grid's rectangle.
Point at_unit(const Grid& g, double u, double v);

// Default marked points p, q, r for the three-point construction, in
// normalized coordinates.
std::vector<Point> default_marked_unit_points();

struct DistinguishedGeometry {
  CellSet border;               // outer cell ring; stands for the boundary of the square
  CellIndex center = 0;         // cell of the center point
  std::vector<CellIndex> marked;  // p, q, r

  // `marked_points` in domain coordinates; empty selects the defaults.
  static DistinguishedGeometry of(const Grid& g, const std::vector<Point>& marked_points = {});
};

}  // namespace qmlab
