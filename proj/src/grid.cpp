#include "qmlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "qmlab/errors.hpp"

namespace qmlab {

std::string_view to_string(Kind k) { return k == Kind::Open ? "open" : "closed"; }

Grid Grid::square(int n, Connectivity conn, Rect domain) {
  if (n < 3) throw PreconditionViolation("grid needs n >= 3, got " + std::to_string(n));
  if (n % 2 == 0) throw PreconditionViolation("grid side must be odd, got " + std::to_string(n));
  if (!(domain.x0 < domain.x1) || !(domain.y0 < domain.y1))
    throw PreconditionViolation("grid domain must be a nondegenerate rectangle");
  return Grid(n, n, false, conn, domain);
}

Grid Grid::discrete(int points) {
  if (points < 1) throw PreconditionViolation("discrete space needs at least one point");
  return Grid(1, points, true, Connectivity::Closed8Open4, Rect{});
}

Adjacency Grid::region_adjacency() const {
  if (discrete_) return Adjacency::None;
  return conn_ == Connectivity::Closed8Open4 ? Adjacency::Eight : Adjacency::Four;
}

Adjacency Grid::complement_adjacency() const {
  if (discrete_) return Adjacency::None;
  return conn_ == Connectivity::Closed8Open4 ? Adjacency::Four : Adjacency::Eight;
}

Point Grid::unit_point(CellIndex c) const {
  const auto [r, col] = position(c);
  if (discrete_) return {cols_ == 1 ? 0.0 : static_cast<double>(col) / (cols_ - 1), 0.0};
  return {static_cast<double>(col) / (cols_ - 1), 1.0 - static_cast<double>(r) / (rows_ - 1)};
}

Point Grid::sample_point(CellIndex c) const {
  const auto u = unit_point(c);
  return {domain_.x0 + u.x * (domain_.x1 - domain_.x0), domain_.y0 + u.y * (domain_.y1 - domain_.y0)};
}

CellIndex Grid::locate(Point p) const {
  if (discrete_) throw PreconditionViolation("discrete spaces have no geometry");
  const double ux = (p.x - domain_.x0) / (domain_.x1 - domain_.x0);
  const double uy = (p.y - domain_.y0) / (domain_.y1 - domain_.y0);
  if (ux < 0.0 || ux > 1.0 || uy < 0.0 || uy > 1.0)
    throw PreconditionViolation("point outside the grid domain");
  // Column c covers x in [(c - 1/2)/(n-1), (c + 1/2)/(n-1)]; a boundary goes left.
  const double v = ux * (cols_ - 1) + 0.5;
  int col = static_cast<int>(std::ceil(v)) - 1;
  // Row r covers y in [1 - (r + 1/2)/(n-1), 1 - (r - 1/2)/(n-1)]; a boundary
  // goes down, which is the larger row index.
  const double w = (1.0 - uy) * (rows_ - 1) + 0.5;
  int row = static_cast<int>(std::floor(w));
  col = std::clamp(col, 0, cols_ - 1);
  row = std::clamp(row, 0, rows_ - 1);
  return index(row, col);
}

CellIndex Grid::center() const {
  if (discrete_) throw PreconditionViolation("discrete spaces have no center");
  return index(rows_ / 2, cols_ / 2);
}

std::string Grid::spec() const {
  if (discrete_) return "discrete=" + std::to_string(cols_);
  std::string s = "n=" + std::to_string(rows_) + ", adjacency=";
  s += conn_ == Connectivity::Closed8Open4 ? "8/4" : "4/8";
  return s;
}

Grid Grid::parse_spec(std::string_view text) {
  const std::string t(text);
  std::smatch m;
  static const std::regex kSquare(R"(^\s*n\s*=\s*(\d+)\s*(?:,\s*adjacency\s*=\s*(8/4|4/8))?\s*$)");
  static const std::regex kDiscrete(R"(^\s*discrete\s*=\s*(\d+)\s*$)");
  if (std::regex_match(t, m, kSquare)) {
    const int n = std::stoi(m[1].str());
    const auto conn = (m[2].matched && m[2].str() == "4/8") ? Connectivity::Closed4Open8
                                                             : Connectivity::Closed8Open4;
    return square(n, conn);
  }
  if (std::regex_match(t, m, kDiscrete)) return discrete(std::stoi(m[1].str()));
  throw ParseError("bad grid spec: '" + t + "'");
}

void require_on(const Grid& g, const Image& a, const char* what) {
  if (a.cells.universe() != g.size())
    throw SpaceMismatch(std::string(what) + ": image does not belong to grid " + g.spec());
}

}  // namespace qmlab
