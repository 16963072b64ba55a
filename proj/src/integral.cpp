#include "qmlab/integral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmlab/errors.hpp"

namespace qmlab {

namespace {

constexpr double kMonotoneSlack = 1e-12;

void require_same_grid(const QuasiMeasure& m, const GridFunction& a) {
  if (!(m.grid() == a.grid())) throw SpaceMismatch("measure and function live on different grids");
}

}  // namespace

Image sublevel(const GridFunction& a, double t) {
  CellSet s = a.grid().none();
  for (CellIndex c = 0; c < a.grid().size(); ++c)
    if (a[c] <= t) s.insert(c);
  return Image::closed(std::move(s));
}

Image interval_preimage(const GridFunction& a, double lo, double hi) {
  CellSet s = a.grid().none();
  for (CellIndex c = 0; c < a.grid().size(); ++c)
    if (a[c] > lo && a[c] < hi) s.insert(c);
  return Image::open(std::move(s));
}

double PushforwardDistribution::cdf(double t) const {
  double f = 0.0;
  for (const auto& j : jumps) {
    if (j.t > t) break;
    f += j.mass;
  }
  return f;
}

double PushforwardDistribution::expectation(const std::function<double(double)>& phi) const {
  double s = 0.0;
  for (const auto& j : jumps) s += phi(j.t) * j.mass;
  return s;
}

double PushforwardDistribution::mean() const {
  double s = 0.0;
  for (const auto& j : jumps) s += j.t * j.mass;
  return s;
}

PushforwardDistribution pushforward_distribution(const QuasiMeasure& m, const GridFunction& a) {
  require_same_grid(m, a);
  PushforwardDistribution d;
  double prev = 0.0;
  for (const double t : a.distinct_values()) {
    const double f = m.eval(sublevel(a, t));
    if (f < prev - kMonotoneSlack)
      throw InvariantViolation("distribution function decreases at t = " + std::to_string(t) + " (" +
                               std::to_string(prev) + " -> " + std::to_string(f) + ")");
    if (f > prev) d.jumps.push_back({t, f - prev});
    prev = std::max(prev, f);
  }
  if (std::abs(prev - 1.0) > kMonotoneSlack)
    throw InvariantViolation("distribution function ends at " + std::to_string(prev) + ", not 1");
  return d;
}

double integrate(const QuasiMeasure& m, const GridFunction& a) { return pushforward_distribution(m, a).mean(); }

double simple_value(const QuasiMeasure& sigma, const GridFunction& a) {
  require_same_grid(sigma, a);
  const auto t = a.distinct_values();
  const auto probe = [&](std::size_t i) {
    const double v = sigma.eval(sublevel(a, t[i]));
    if (v != 0.0 && v != 1.0)
      throw InvariantViolation("measure is not simple on the sublevel sets (value " + std::to_string(v) + ")");
    return v == 1.0;
  };
  // The top sublevel set is the whole space.
  std::size_t lo = 0;
  std::size_t hi = t.size() - 1;
  if (!probe(hi)) throw InvariantViolation("measure of the whole space is not 1");
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo > 0 && probe(lo - 1)) throw InvariantViolation("distribution of a simple measure has more than one jump");
  return t[lo];
}

std::vector<double> spectrum(const GridFunction& a) { return a.distinct_values(); }

}  // namespace qmlab
