#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qmlab/grid.hpp"

namespace qmlab {

// One real value per cell: the sample of a bounded function at the points the
// cells represent.
class GridFunction {
 public:
  GridFunction(Grid g, std::vector<double> values, std::string name = {});

  static GridFunction constant(const Grid& g, double c);
  // f(u, v) in normalized coordinates of the square.
  static GridFunction from_unit(const Grid& g, const std::function<double(double, double)>& f, std::string name);
  // 1 at the center, falling linearly to 0 on all four sides.
  static GridFunction pyramid(const Grid& g);
  // 0 on the lower half, rising linearly to 1 along the top side.
  static GridFunction plane_b(const Grid& g);
  static GridFunction coords_x(const Grid& g);
  static GridFunction coords_y(const Grid& g);
  static GridFunction indicator(const Grid& g, const CellSet& s, std::string name = {});
  // pyramid, plane_b, pyramid_plus_plane, constant:<c>, coords:x, coords:y
  static GridFunction builtin(const Grid& g, std::string_view name);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::string& name() const { return name_; }
  double operator[](CellIndex c) const { return values_[c]; }

  double min() const;
  double max() const;
  // Sorted distinct values.
  std::vector<double> distinct_values() const;

  // φ applied valuewise.
  GridFunction map(const std::function<double(double)>& phi, std::string name = {}) const;
  GridFunction renamed(std::string name) const;

  // Pointwise a <= b.
  bool leq(const GridFunction& other) const;

  // n rows of comma-separated values, row 0 on top, full double precision.
  std::string to_csv() const;
  static GridFunction from_csv(const Grid& g, std::string_view text, std::string name = {});

 private:
  Grid grid_;
  std::vector<double> values_;
  std::string name_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);
GridFunction operator+(const GridFunction& a, double c);

// No sublevel set of a contains a 2x2 block holding exactly one diagonal
// pair. Such "well-composed" level sets have the same components under 4- and
// 8-adjacency, so their closed and open images agree; sampled continuous
// functions can violate this along creases. Discrete grids always qualify.
bool is_well_composed(const GridFunction& a);

// 8-adjacent cells hold equal or consecutive values of the spectrum: the
// sampled form of the intermediate value property. Without it a level set can
// fall between cells (a jumps from -h to h across a zero it never samples), and
// identities for non-monotone maps of a, such as μ(a²) = μ_a(t²), fail on the
// grid for non-Dirac measures. Discrete grids always qualify.
bool resolves_levels(const GridFunction& a);

// max over cells of |a - b|
double max_distance(const GridFunction& a, const GridFunction& b);

}  // namespace qmlab
