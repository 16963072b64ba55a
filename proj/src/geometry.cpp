#include "qmlab/geometry.hpp"

#include <algorithm>

#include "qmlab/errors.hpp"

namespace qmlab {

Point at_unit(const Grid& g, double u, double v) {
  const auto& d = g.domain();
  return {d.x0 + u * (d.x1 - d.x0), d.y0 + v * (d.y1 - d.y0)};
}

std::vector<Point> default_marked_unit_points() { return {{0.25, 0.25}, {0.75, 0.25}, {0.5, 0.75}}; }

DistinguishedGeometry DistinguishedGeometry::of(const Grid& g, const std::vector<Point>& marked_points) {
  if (g.is_discrete()) throw PreconditionViolation("distinguished geometry needs a square grid");
  DistinguishedGeometry geo;
  geo.border = g.none();
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (r == 0 || c == 0 || r == g.rows() - 1 || c == g.cols() - 1) geo.border.insert(g.index(r, c));
  geo.center = g.center();
  if (marked_points.empty()) {
    for (const auto& u : default_marked_unit_points()) geo.marked.push_back(g.locate(at_unit(g, u.x, u.y)));
  } else {
    for (const auto& p : marked_points) geo.marked.push_back(g.locate(p));
  }
  auto sorted = geo.marked;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionViolation("marked points must fall in distinct cells at " + g.spec());
  return geo;
}

}  // namespace qmlab
