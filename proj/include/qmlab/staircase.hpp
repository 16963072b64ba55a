#pragma once

#include <vector>

#include "qmlab/grid_function.hpp"

namespace qmlab {

// Splitting of a <= b into clamped pieces a = Σ a_i, b = Σ b_i with
// a_i <= b_i + δ/n. With ã = a + M and b̃ = b + M + δ (so 0 <= ã <= b̃ - δ),
// a_i = φ_i(ã) - M/n and b_i = φ_i(b̃) - (M + δ)/n, where φ_i clamps to the
// i-th step [β_{i-1}, β_i] of a partition of [0, max b̃].
struct StaircaseDecomposition {
  std::vector<GridFunction> a_pieces;
  std::vector<GridFunction> b_pieces;
  std::vector<GridFunction> a_shifted;  // φ_i(ã)
  std::vector<GridFunction> b_shifted;  // φ_i(b̃)
  std::vector<double> beta;             // β_0 = 0 < ... < β_n = β
  double delta = 0.0;
  double shift = 0.0;  // M
  int n = 0;

  double step_width(int i) const { return width_[static_cast<std::size_t>(i - 1)]; }
  // φ_i, i in 1..n
  double phi(int i, double x) const;

  std::vector<double> width_;
};

// M = max(0, -min a); n is the smallest count whose uniform step is strictly
// below δ. Throws PreconditionViolation unless a <= b and δ > 0.
StaircaseDecomposition staircase(const GridFunction& a, const GridFunction& b, double delta);
// Explicit M and n. Requires M >= -min a and a uniform step β/n <= δ, which is
// all the clamping argument uses.
StaircaseDecomposition staircase(const GridFunction& a, const GridFunction& b, double delta, double shift, int pieces);

struct StaircaseResiduals {
  double sum_a = 0.0;         // max |Σ a_i - a|
  double sum_b = 0.0;         // max |Σ b_i - b|
  double order = 0.0;         // max (a_i - b_i - δ/n), <= 0 when the bound holds
  double product = 0.0;       // max |ã_i (β_i - β_{i-1} - b̃_i)|
};

StaircaseResiduals staircase_residuals(const GridFunction& a, const GridFunction& b, const StaircaseDecomposition& d);

}  // namespace qmlab
