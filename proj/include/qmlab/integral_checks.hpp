#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qmlab/grid_function.hpp"
#include "qmlab/integral.hpp"
#include "qmlab/report.hpp"
#include "qmlab/shapes.hpp"

namespace qmlab {

// A real map applied valuewise, with a name for reports.
struct ValueMap {
  std::string name;
  std::function<double(double)> f;
  bool polynomial = true;  // false when transcendental functions enter
};

// A few named maps used by the suites: t, t², 2t, 3t, -t, 1, t³ - t, sin, exp.
std::vector<ValueMap> standard_value_maps();

// μ(φ(a)) against Σ φ(t_k) mass_k of the distribution of a; passes within 1e-9.
Report change_of_variables_check(const QuasiMeasure& m, const GridFunction& a, const ValueMap& phi);

// μ(φ(a) + ψ(a)) = μ(φ(a)) + μ(ψ(a)) within 1e-9, positivity of μ(φ(a)) and
// μ(ψ(a)) when they are nonnegative functions, and μ(1) = 1.
Report quasi_linearity_check(const QuasiMeasure& m, const GridFunction& a, const ValueMap& phi, const ValueMap& psi);

// For simple σ: σ(φ(a)ψ(a)) = σ(φ(a)) σ(ψ(a)), exactly for polynomial maps
// and within 1e-9 otherwise.
Report multiplicativity_check(const QuasiMeasure& sigma, const GridFunction& a, const ValueMap& phi, const ValueMap& psi);

// a <= b ⇒ μ(a) <= μ(b), and |μ(a) - μ(b)| <= ‖a - b‖ on every pair.
Report functional_bounds_check(const QuasiMeasure& m, const std::vector<std::pair<GridFunction, GridFunction>>& pairs);

// Construct the staircase of a <= b and check its postconditions: sums within
// 1e-12, a_i <= b_i + δ/n up to the same rounding allowance (with the clamped
// parts ordered exactly), and ã_i (β_i - β_{i-1} - b̃_i) = 0.
Report staircase_check(const GridFunction& a, const GridFunction& b, double delta);

// Functions k subordinate to an open U: 0 <= k <= 1 and k = 0 off U.
bool is_subordinate(const GridFunction& k, const Image& u);

// Three plateau functions for U: the indicator of erode(U, 2), the indicator of
// erode(U, 1), and the ramp that is 1 on erode(U, 2) and 1/2 on the cells of
// erode(U, 1) one step from its edge. Erosion is taken relative to the grid
// edge.
std::vector<GridFunction> plateau_subordinates(const Grid& g, const Image& u);

// For each U: the largest μ(k) over its subordinates equals μ(U).
Report riesz_roundtrip_check(const QuasiMeasure& m, const std::vector<shapes::Named>& open_family,
                             const std::vector<std::vector<GridFunction>>& subordinates);

}  // namespace qmlab
