#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmlab/measure.hpp"
#include "qmlab/report.hpp"
#include "qmlab/shapes.hpp"

namespace qmlab {

// Every value on the family is 0 or 1.
bool is_simple(const QuasiMeasure& m, const std::vector<Image>& family);

// μ(A ⊎ B) = μ(A) + μ(B) on every pair. Throws MalformedPair when a pair
// overlaps or its union is not an image of the stated kind.
Report check_additivity(const QuasiMeasure& m, const std::vector<shapes::DisjointPair>& pairs);

// μ(X) = 1 for both kinds of X, values in [0,1], μ(A) + μ(A^c) = 1.
Report check_complementation(const QuasiMeasure& m, const std::vector<shapes::Named>& family);

// A ⊆ B ⇒ μ(A) ≤ μ(B) over all contained pairs of the family.
Report check_monotonicity(const QuasiMeasure& m, const std::vector<shapes::Named>& family);

// Along an increasing chain of open images the values are nondecreasing and
// end at the value of the last member.
Report check_chain_continuity(const QuasiMeasure& m, const std::vector<Image>& chain);

// Witness-based inner regularity: the best closed witness K = erode(u, d)
// (relative to the grid edge) must reach μ(u). Sound, not complete.
Report check_regularity(const QuasiMeasure& m, const Image& u, const std::vector<int>& witness_depths = {0, 1, 2});

struct NonSubadditiveWitness {
  Image a;
  Image b;
  Image joined;
  double value_a = 0.0;
  double value_b = 0.0;
  double value_joined = 0.0;
  std::string origin;         // template name or "random"
  std::size_t candidates = 0;  // candidates evaluated up to and including this one
};

struct WitnessSearch {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  bool templates = true;
};

// Closed A, B with μ(A ∪ B) > μ(A) + μ(B). Template pairs (border arcs, split
// lenses between marked points) come first in a fixed order, then seeded
// random blob pairs. Deterministic per seed.
std::optional<NonSubadditiveWitness> find_nonsubadditive_witness(const QuasiMeasure& m,
                                                                 const DistinguishedGeometry& geo,
                                                                 const WitnessSearch& search);

// Subadditivity on open pairs forces a point mass: if no pair violates it,
// the intersection of the closed sets of measure one in the family must hold
// exactly one cell x with μ({x}) = 1. Inconclusive when the family is too
// small to decide or the measure is not simple on it.
Report dirac_characterization_check(const QuasiMeasure& m, const std::vector<std::pair<Image, Image>>& pairs);

}  // namespace qmlab
