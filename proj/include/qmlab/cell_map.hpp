#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qmlab/grid.hpp"

namespace qmlab {

// A map sending each cell of `from` to a cell of `to`.
class CellMap {
 public:
  CellMap(Grid from, Grid to, std::vector<CellIndex> targets);

  static CellMap identity(const Grid& g);
  // (r, c) -> (r + drow, c + dcol), clamped into the grid.
  static CellMap shift(const Grid& g, int drow, int dcol);
  // Mirrors the right half onto the left half: (r, c) -> (r, min(c, n-1-c)).
  static CellMap fold(const Grid& g);
  // Every cell of `from` goes to `target`.
  static CellMap constant(const Grid& from, const Grid& to, CellIndex target);

  const Grid& from() const { return from_; }
  const Grid& to() const { return to_; }
  CellIndex operator()(CellIndex c) const { return targets_[c]; }
  const std::vector<CellIndex>& targets() const { return targets_; }

  // next ∘ this
  CellMap then(const CellMap& next) const;

  // Region-adjacent cells go to equal or region-adjacent cells.
  bool is_continuous() const;

  // One "from,to" index pair per line after a "from,to" header.
  std::string to_csv() const;
  static CellMap from_csv(const Grid& from, const Grid& to, std::string_view text);

 private:
  Grid from_;
  Grid to_;
  std::vector<CellIndex> targets_;
};

// {c in f.from() : f(c) in a}, kind preserved.
Image preimage(const CellMap& f, const Image& a);

}  // namespace qmlab
