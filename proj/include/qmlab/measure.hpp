#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qmlab/cell_map.hpp"
#include "qmlab/geometry.hpp"
#include "qmlab/grid.hpp"

namespace qmlab {

// A 0-1 rule on solid sets. The rule only looks at how many border cells,
// whether the center, and how many distinguished points a set contains, so it
// can be evaluated on aggregated counts.
class SolidRule {
 public:
  enum class Variant { AarnesSquare, ThreePoint, DiracAt };

  struct Tally {
    std::size_t border = 0;
    std::size_t points = 0;
    bool center = false;

    Tally& operator+=(const Tally& o) {
      border += o.border;
      points += o.points;
      center = center || o.center;
      return *this;
    }
  };

  // 1 iff the set contains the border, or meets the border and contains the center.
  static SolidRule aarnes_square(const DistinguishedGeometry& geo);
  // 1 iff the set holds at least two of p, q, r (the uniform three-point
  // measure exceeds one half).
  static SolidRule three_point(const DistinguishedGeometry& geo);
  static SolidRule dirac(std::size_t universe, CellIndex cell);

  Variant variant() const { return variant_; }
  const std::vector<CellIndex>& points() const { return points_; }

  Tally tally_cell(CellIndex c) const;
  Tally tally(const CellSet& s) const;
  bool decide(const Tally& t) const;
  bool holds(const CellSet& solid) const { return decide(tally(solid)); }

 private:
  Variant variant_ = Variant::DiracAt;
  CellSet border_;
  std::size_t border_total_ = 0;
  CellIndex center_ = 0;
  bool has_center_ = false;
  std::vector<CellIndex> points_;
  CellSet point_set_;
};

// An evaluatable quasi-measure on the images of one grid. Values are immutable
// and cheap to copy.
class QuasiMeasure {
 public:
  enum class Variant { FromSolidRule, Pushforward, Mixture, Pullback };

  static QuasiMeasure from_rule(const Grid& g, SolidRule rule, std::string label);
  static QuasiMeasure aarnes(const Grid& g, const DistinguishedGeometry& geo);
  static QuasiMeasure three_point(const Grid& g, const DistinguishedGeometry& geo);
  static QuasiMeasure dirac(const Grid& g, CellIndex cell);
  // A ↦ inner(f⁻¹(A)) on f.to(); f.from() must be inner's grid.
  static QuasiMeasure pushforward(const QuasiMeasure& inner, const CellMap& f);
  // Weights nonnegative, summing to 1 within 1e-12, all parts on one grid.
  static QuasiMeasure mixture(const std::vector<double>& weights, const std::vector<QuasiMeasure>& parts);
  // A ↦ target(map(A)) for images A of `source`.
  static QuasiMeasure pulled_back(const Grid& source, std::function<Image(const Image&)> map,
                                  const QuasiMeasure& target, std::string label);

  const Grid& grid() const;
  const std::string& label() const;
  Variant variant() const;
  // Solid-rule rule, or nullptr for composite measures.
  const SolidRule* rule() const;
  // True when every value is computed without rounding (no mixture inside).
  bool exact() const;
  // Absolute tolerance for identities between values of this measure.
  double tolerance() const { return exact() ? 0.0 : 1e-12; }

  double eval(const Image& a) const;

  struct Node;

 private:
  explicit QuasiMeasure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline double eval(const QuasiMeasure& m, const Image& a) { return m.eval(a); }

// The extension chain of a solid rule evaluated literally on cells: components
// of a closed image, complement components of each, every one of them checked
// for solidity. Slow; used to cross-check the evaluator. Square grids only.
double eval_reference(const Grid& g, const SolidRule& rule, const Image& a);

}  // namespace qmlab
