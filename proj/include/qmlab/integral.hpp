#pragma once

#include <functional>
#include <vector>

#include "qmlab/grid_function.hpp"
#include "qmlab/measure.hpp"

namespace qmlab {

// a^{-1}(-inf, t] as a closed image.
Image sublevel(const GridFunction& a, double t);
// a^{-1}(lo, hi) as an open image (strict inequalities; infinite bounds allowed).
Image interval_preimage(const GridFunction& a, double lo, double hi);

struct Jump {
  double t = 0.0;
  double mass = 0.0;
};

// The atomic distribution of a under a quasi-measure: F(t) = μ(a <= t).
struct PushforwardDistribution {
  std::vector<Jump> jumps;  // strictly increasing t, positive masses

  double cdf(double t) const;
  // Σ φ(t_k) mass_k
  double expectation(const std::function<double(double)>& phi) const;
  double mean() const;
};

// Sweeps the distinct values of a. Throws InvariantViolation if F decreases
// or does not end at 1.
PushforwardDistribution pushforward_distribution(const QuasiMeasure& m, const GridFunction& a);

// ∫ t dμ_a(t)
double integrate(const QuasiMeasure& m, const GridFunction& a);

// The single jump of a simple quasi-measure's distribution, found by binary
// search over the sorted values. Throws InvariantViolation if a probed value
// is not 0 or 1 or the jump is not unique along the search path.
double simple_value(const QuasiMeasure& sigma, const GridFunction& a);

// The sampled range of a (finite, hence closed).
std::vector<double> spectrum(const GridFunction& a);

}  // namespace qmlab
