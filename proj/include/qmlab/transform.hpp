#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qmlab/cell_map.hpp"
#include "qmlab/grid_function.hpp"
#include "qmlab/measure.hpp"

namespace qmlab {

struct StarMember {
  std::string label;
  QuasiMeasure measure;
};

// Finite list of simple quasi-measures on one grid with distinct labels;
// stands in for the space of all simple quasi-measures.
class FiniteStarSample {
 public:
  explicit FiniteStarSample(std::vector<StarMember> members);

  // δ_x for every cell x, labeled "dirac(r,c)".
  static FiniteStarSample diracs(const Grid& g);

  const Grid& grid() const { return members_.front().measure.grid(); }
  const std::vector<StarMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  // Every member is 0-1 valued on the family.
  bool all_simple(const std::vector<Image>& family) const;

 private:
  std::vector<StarMember> members_;
};

// A map from images of a source grid to images of a target grid.
class ImageTransformation {
 public:
  enum class Variant { Preimage, FromSimple, StarRestricted, Composite, Vanishing, Reconstructed };

  // A ↦ f⁻¹(A) for f: Y → X; source X = f.to(), target Y = f.from().
  static ImageTransformation preimage(const CellMap& f);
  // A ↦ Y if σ(A) = 1, ∅ if σ(A) = 0.
  static ImageTransformation from_simple(const QuasiMeasure& sigma, const Grid& target);
  // A ↦ {members σ with σ(A) = 1} on the discrete space of sample labels.
  static ImageTransformation star_restricted(const FiniteStarSample& sample);
  // A ↦ ∅. Not an image transformation; a negative control.
  static ImageTransformation vanishing(const Grid& source, const Grid& target);
  // Wraps a computed map; the map must preserve kinds.
  static ImageTransformation from_function(const Grid& source, const Grid& target,
                                           std::function<Image(const Image&)> map, std::string label);

  const Grid& source() const;
  const Grid& target() const;
  Variant variant() const;
  const std::string& label() const;
  // Labels of the target points: sample labels for star-restricted maps,
  // "r,c" cell positions otherwise.
  std::vector<std::string> target_labels() const;

  Image apply(const Image& a) const;

  struct Node;

 private:
  explicit ImageTransformation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend ImageTransformation compose(const ImageTransformation& p, const ImageTransformation& q);
  std::shared_ptr<const Node> node_;
};

// p ∘ q: apply q, then p. Throws SpaceMismatch unless q's target is p's source.
ImageTransformation compose(const ImageTransformation& p, const ImageTransformation& q);

// q*μ := μ ∘ q on the source grid.
QuasiMeasure pullback(const ImageTransformation& q, const QuasiMeasure& mu);

// q(a)(y) = (q*δ_y)(a), computed as the smallest sampled t with
// y ∈ q(a ≤ t). Throws InvariantViolation if q(X) misses a target point.
GridFunction induced_function(const ImageTransformation& q, const GridFunction& a);

}  // namespace qmlab
