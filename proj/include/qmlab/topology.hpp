#pragma once

#include <optional>
#include <vector>

#include "qmlab/grid.hpp"

namespace qmlab {

// Component label per cell; -1 for cells outside the labeled set.
struct Labeling {
  std::vector<int> label;
  int count = 0;
};

Labeling label_components(const Grid& g, const CellSet& s, Adjacency adj);
std::vector<CellSet> connected_components(const Grid& g, const CellSet& s, Adjacency adj);
bool is_connected(const Grid& g, const CellSet& s, Adjacency adj);

// Connected, with connected complement, each under the adjacency its kind
// carries. The empty set and the whole grid are solid.
bool is_solid(const Grid& g, const Image& a);

enum class EdgeMode {
  OutsideIsComplement,  // cells on the grid edge count as touching the complement
  Relative,             // the grid edge is not a boundary (X is open in itself)
};

// Removes every cell within `steps` region-adjacency hops of the complement.
CellSet erode(const Grid& g, const CellSet& s, int steps,
              EdgeMode mode = EdgeMode::OutsideIsComplement);

// Largest depth d with c in erode(s, d, mode); -1 when c is not in s.
std::vector<int> erosion_depth(const Grid& g, const CellSet& s, EdgeMode mode);

// Set relations between images read as point sets. Under Closed8Open4 a
// closed image is the union of its closed cells and an open image the interior
// of that union; Closed4Open8 uses cells with cut corners (see topology.cpp).
// In both, an open image is the complement of the closed image of the
// complementary cells.
bool is_clopen(const Grid& g, const CellSet& s);
bool same_set(const Grid& g, const Image& a, const Image& b);
bool contains(const Grid& g, const Image& outer, const Image& inner);
bool disjoint(const Grid& g, const Image& a, const Image& b);

// a ⊎ b as an image of the requested kind, if a and b are disjoint and their
// union is representable with that kind.
std::optional<Image> disjoint_union(const Grid& g, const Image& a, const Image& b, Kind kind);

// Union of two (possibly overlapping) open images, if it is the open image of
// the union of their cells.
std::optional<Image> open_union(const Grid& g, const Image& u, const Image& v);

}  // namespace qmlab
