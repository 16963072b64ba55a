#include "qmlab/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qmlab/errors.hpp"

namespace qmlab {

double StaircaseDecomposition::phi(int i, double x) const {
  const double lo = beta[static_cast<std::size_t>(i - 1)];
  const double hi = beta[static_cast<std::size_t>(i)];
  if (x <= lo) return 0.0;
  if (x >= hi) return step_width(i);
  return x - lo;
}

namespace {

void check_inputs(const GridFunction& a, const GridFunction& b, double delta) {
  if (!(delta > 0.0)) throw PreconditionViolation("staircase needs delta > 0");
  if (!a.leq(b)) throw PreconditionViolation("staircase needs a <= b pointwise");
}

}  // namespace

StaircaseDecomposition staircase(const GridFunction& a, const GridFunction& b, double delta) {
  check_inputs(a, b, delta);
  const double m = std::max(0.0, -a.min());
  const double beta = b.max() + m + delta;
  // A step slightly below δ keeps β_i - β_{i-1} < δ with room for rounding.
  const double target = delta * (1.0 - 1e-9);
  const int n = std::max(1, static_cast<int>(std::ceil(beta / target)));
  return staircase(a, b, delta, m, n);
}

StaircaseDecomposition staircase(const GridFunction& a, const GridFunction& b, double delta, double shift, int pieces) {
  check_inputs(a, b, delta);
  if (pieces < 1) throw PreconditionViolation("staircase needs at least one piece");
  if (shift < -a.min()) throw PreconditionViolation("shift M must make a + M nonnegative");
  StaircaseDecomposition d;
  d.delta = delta;
  d.shift = shift;
  d.n = pieces;
  const GridFunction at = a + shift;
  const GridFunction bt = b + (shift + delta);
  const double beta = bt.max();
  if (beta / pieces > delta)
    throw PreconditionViolation("partition step " + std::to_string(beta / pieces) + " exceeds delta");
  d.beta.resize(static_cast<std::size_t>(pieces) + 1);
  for (int i = 0; i <= pieces; ++i) d.beta[static_cast<std::size_t>(i)] = beta * i / pieces;
  d.beta.back() = beta;
  for (int i = 1; i <= pieces; ++i)
    d.width_.push_back(d.beta[static_cast<std::size_t>(i)] - d.beta[static_cast<std::size_t>(i - 1)]);

  const double a_off = shift / pieces;
  const double b_off = (shift + delta) / pieces;
  for (int i = 1; i <= pieces; ++i) {
    const auto phi_i = [&d, i](double x) { return d.phi(i, x); };
    auto ai = at.map(phi_i, "a~" + std::to_string(i));
    auto bi = bt.map(phi_i, "b~" + std::to_string(i));
    d.a_pieces.push_back(ai.map([a_off](double x) { return x - a_off; }, "a" + std::to_string(i)));
    d.b_pieces.push_back(bi.map([b_off](double x) { return x - b_off; }, "b" + std::to_string(i)));
    d.a_shifted.push_back(std::move(ai));
    d.b_shifted.push_back(std::move(bi));
  }
  return d;
}

StaircaseResiduals staircase_residuals(const GridFunction& a, const GridFunction& b, const StaircaseDecomposition& d) {
  StaircaseResiduals r;
  r.order = -std::numeric_limits<double>::infinity();
  const std::size_t cells = a.values().size();
  const double slack = d.delta / d.n;
  for (std::size_t c = 0; c < cells; ++c) {
    double sa = 0.0;
    double sb = 0.0;
    for (int i = 0; i < d.n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      sa += d.a_pieces[k].values()[c];
      sb += d.b_pieces[k].values()[c];
      r.order = std::max(r.order, d.a_pieces[k].values()[c] - d.b_pieces[k].values()[c] - slack);
      r.product = std::max(r.product, std::abs(d.a_shifted[k].values()[c] *
                                               (d.width_[k] - d.b_shifted[k].values()[c])));
    }
    r.sum_a = std::max(r.sum_a, std::abs(sa - a.values()[c]));
    r.sum_b = std::max(r.sum_b, std::abs(sb - b.values()[c]));
  }
  return r;
}

}  // namespace qmlab
