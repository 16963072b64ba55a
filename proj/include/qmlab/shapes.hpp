#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmlab/geometry.hpp"
#include "qmlab/grid.hpp"

namespace qmlab::shapes {

// Template cell sets. Coordinates and radii are normalized to the unit square.

CellSet border_ring(const Grid& g);
// Cells whose ring depth (hops to the grid edge) is below `width`.
CellSet band(const Grid& g, int width);
// Border cells left of the center column (left), or the rest (right).
CellSet half_ring(const Grid& g, bool left);
CellSet disk(const Grid& g, Point center, double radius);
CellSet annulus(const Grid& g, Point center, double inner, double outer);
CellSet rect(const Grid& g, Point lo, Point hi);
// Cells within `radius` of the segment from a to b.
CellSet stadium(const Grid& g, Point a, Point b, double radius);
// Vertical bar of half-width `half_width` cells from the bottom edge up to the center.
CellSet strip(const Grid& g, int half_width);
// Band of width `width` joined to the center by a vertical bar: an open
// neighborhood of the border and the center.
CellSet band_and_bar(const Grid& g, int width);
// Seeded random growth of `size` cells from `start`, holes filled so the
// complement is connected.
CellSet blob(const Grid& g, std::uint64_t seed, std::size_t size, std::optional<CellIndex> start = {});

// Named template, e.g. "border_ring", "half_ring:left", "disk:0.3,0.7,0.1",
// "blob:7", "lens:p,q". Unknown names raise ParseError.
CellSet from_name(const Grid& g, const DistinguishedGeometry& geo, std::string_view name);

struct Named {
  std::string name;
  Image image;
};

// At least fifty images: every template set in both kinds.
std::vector<Named> standard_family(const Grid& g, const DistinguishedGeometry& geo);

// Ten open images of different character (whole space, neighborhoods of the
// border and center, small disks, lenses, blobs).
std::vector<Named> open_family(const Grid& g, const DistinguishedGeometry& geo);

struct DisjointPair {
  std::string name;
  Image a;
  Image b;
  Kind union_kind = Kind::Closed;
};

// Every pair of family members whose disjoint union is representable.
std::vector<DisjointPair> disjoint_pairs(const Grid& g, const std::vector<Named>& family, std::size_t limit = 400);

// Pairs of overlapping open images whose union is an open image.
std::vector<std::pair<Image, Image>> open_pairs(const Grid& g, const DistinguishedGeometry& geo);

}  // namespace qmlab::shapes
