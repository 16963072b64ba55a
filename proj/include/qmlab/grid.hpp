#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "qmlab/cellset.hpp"

namespace qmlab {

enum class Kind { Open, Closed };

constexpr Kind opposite(Kind k) { return k == Kind::Open ? Kind::Closed : Kind::Open; }
std::string_view to_string(Kind k);

enum class Adjacency { None, Four, Eight };

// Which adjacency closed images use; open images use the dual one.
// Closed8Open4 models a closed image as a union of closed squares (corner
// contact connects) and an open image as the interior of such a union.
enum class Connectivity { Closed8Open4, Closed4Open8 };

struct RowCol {
  int row = 0;
  int col = 0;
  bool operator==(const RowCol&) const = default;
};

struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 1.0;
  double y1 = 1.0;
  bool operator==(const Rect&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Discretized ambient space. A square grid is an odd n x n array of cells over
// an axis-aligned rectangle; cell (r, c) represents the point at normalized
// coordinates (c / (n-1), 1 - r / (n-1)), so the outer ring of cells stands
// for the boundary of the rectangle and the middle cell for its center. A
// discrete grid is a 1 x k row of isolated points in which every subset is
// clopen.
class Grid {
 public:
  static Grid square(int n, Connectivity conn = Connectivity::Closed8Open4,
                     Rect domain = {});
  static Grid discrete(int points);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }
  bool is_discrete() const { return discrete_; }
  Connectivity connectivity() const { return conn_; }
  const Rect& domain() const { return domain_; }

  Adjacency region_adjacency() const;
  Adjacency complement_adjacency() const;
  Adjacency adjacency(Kind kind) const {
    return kind == Kind::Closed ? region_adjacency() : complement_adjacency();
  }

  CellIndex index(int row, int col) const {
    return static_cast<CellIndex>(row) * static_cast<CellIndex>(cols_) + static_cast<CellIndex>(col);
  }
  CellIndex index(RowCol rc) const { return index(rc.row, rc.col); }
  RowCol position(CellIndex c) const {
    return {static_cast<int>(c / static_cast<CellIndex>(cols_)),
            static_cast<int>(c % static_cast<CellIndex>(cols_))};
  }
  bool in_bounds(int row, int col) const {
    return row >= 0 && row < rows_ && col >= 0 && col < cols_;
  }

  template <class F>
  void for_each_neighbor(CellIndex c, Adjacency adj, F&& f) const {
    if (adj == Adjacency::None) return;
    const auto [r, col] = position(c);
    static constexpr std::array<std::array<int, 2>, 8> kOffsets{
        {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};
    const std::size_t count = adj == Adjacency::Four ? 4 : 8;
    for (std::size_t i = 0; i < count; ++i) {
      const int rr = r + kOffsets[i][0];
      const int cc = col + kOffsets[i][1];
      if (in_bounds(rr, cc)) f(index(rr, cc));
    }
  }

  // Normalized position in [0,1]^2 of the point a cell represents.
  Point unit_point(CellIndex c) const;
  // The same point in domain coordinates.
  Point sample_point(CellIndex c) const;
  // Cell containing a domain point. Cells are the Voronoi regions of their
  // representative points; ties snap toward lower-left.
  CellIndex locate(Point p) const;
  CellIndex center() const;

  CellSet none() const { return CellSet(size()); }
  CellSet all() const { return CellSet::full(size()); }

  // "n=65, adjacency=8/4" or "discrete=4"
  std::string spec() const;
  static Grid parse_spec(std::string_view text);

  bool operator==(const Grid&) const = default;

 private:
  Grid(int rows, int cols, bool discrete, Connectivity conn, Rect domain)
      : rows_(rows), cols_(cols), discrete_(discrete), conn_(conn), domain_(domain) {}

  int rows_;
  int cols_;
  bool discrete_;
  Connectivity conn_;
  Rect domain_;
};

// A cell set that is either open or closed.
struct Image {
  CellSet cells;
  Kind kind = Kind::Closed;

  static Image empty(const Grid& g, Kind k) { return {g.none(), k}; }
  static Image whole(const Grid& g, Kind k) { return {g.all(), k}; }
  static Image closed(CellSet s) { return {std::move(s), Kind::Closed}; }
  static Image open(CellSet s) { return {std::move(s), Kind::Open}; }

  Image complement() const { return {cells.complement(), opposite(kind)}; }
  bool is_open() const { return kind == Kind::Open; }
  bool is_closed() const { return kind == Kind::Closed; }
  bool operator==(const Image&) const = default;
};

void require_on(const Grid& g, const Image& a, const char* what);

}  // namespace qmlab
