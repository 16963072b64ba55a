#include "qmlab/integral_checks.hpp"

#include <algorithm>
#include <cmath>

#include "qmlab/errors.hpp"
#include "qmlab/staircase.hpp"
#include "qmlab/topology.hpp"

namespace qmlab {

namespace {

constexpr double kFloatTolerance = 1e-9;

void fail_with(Report& rep, nlohmann::json witness) {
  rep.status = Status::Fail;
  rep.witness = std::move(witness);
}

}  // namespace

std::vector<ValueMap> standard_value_maps() {
  return {
      {"t", [](double t) { return t; }},
      {"t^2", [](double t) { return t * t; }},
      {"2t", [](double t) { return 2 * t; }},
      {"3t", [](double t) { return 3 * t; }},
      {"-t", [](double t) { return -t; }},
      {"1", [](double) { return 1.0; }},
      {"t^3-t", [](double t) { return t * t * t - t; }},
      {"sin", [](double t) { return std::sin(t); }, false},
      {"exp", [](double t) { return std::exp(t); }, false},
  };
}

Report change_of_variables_check(const QuasiMeasure& m, const GridFunction& a, const ValueMap& phi) {
  Report rep{"change_of_variables", "mu(phi(a)) = integral of phi against mu_a"};
  const double lhs = integrate(m, a.map(phi.f));
  const double rhs = pushforward_distribution(m, a).expectation(phi.f);
  rep.values = {{"function", a.name()}, {"phi", phi.name}, {"lhs", lhs}, {"rhs", rhs}, {"discrepancy", std::abs(lhs - rhs)}};
  if (std::abs(lhs - rhs) > kFloatTolerance) fail_with(rep, rep.values);
  return rep;
}

Report quasi_linearity_check(const QuasiMeasure& m, const GridFunction& a, const ValueMap& phi, const ValueMap& psi) {
  Report rep{"quasi_linearity", "mu linear on the algebra generated by a, positive and normalized"};
  const auto fa = a.map(phi.f);
  const auto ga = a.map(psi.f);
  const double lf = integrate(m, fa);
  const double lg = integrate(m, ga);
  const double ls = integrate(m, fa + ga);
  const double one = integrate(m, GridFunction::constant(a.grid(), 1.0));
  rep.values = {{"function", a.name()}, {"phi", phi.name}, {"psi", psi.name}, {"phi_value", lf},
                {"psi_value", lg},      {"sum_value", ls},  {"one", one}};
  nlohmann::json bad = nlohmann::json::array();
  if (std::abs(ls - lf - lg) > kFloatTolerance) bad.push_back("linearity");
  if (fa.min() >= 0.0 && lf < 0.0) bad.push_back("positivity(phi)");
  if (ga.min() >= 0.0 && lg < 0.0) bad.push_back("positivity(psi)");
  if (std::abs(one - 1.0) > m.tolerance()) bad.push_back("normalization");
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

Report multiplicativity_check(const QuasiMeasure& sigma, const GridFunction& a, const ValueMap& phi, const ValueMap& psi) {
  Report rep{"simple_multiplicativity", "sigma(phi(a) psi(a)) = sigma(phi(a)) sigma(psi(a)) for simple sigma"};
  const auto fa = a.map(phi.f);
  const auto ga = a.map(psi.f);
  const double lf = integrate(sigma, fa);
  const double lg = integrate(sigma, ga);
  const double lp = integrate(sigma, fa * ga);
  const bool exact = phi.polynomial && psi.polynomial;
  const double tol = exact ? 0.0 : kFloatTolerance;
  rep.values = {{"function", a.name()}, {"phi", phi.name}, {"psi", psi.name}, {"product_value", lp},
                {"phi_value", lf},      {"psi_value", lg},  {"tolerance", tol}};
  if (std::abs(lp - lf * lg) > tol) fail_with(rep, rep.values);
  return rep;
}

Report functional_bounds_check(const QuasiMeasure& m, const std::vector<std::pair<GridFunction, GridFunction>>& pairs) {
  Report rep{"functional_bounds", "a <= b implies mu(a) <= mu(b); |mu(a) - mu(b)| <= mu(1) ||a - b||"};
  const double tol = std::max(m.tolerance(), 1e-12);
  nlohmann::json bad = nlohmann::json::array();
  std::size_t ordered = 0;
  for (const auto& [a, b] : pairs) {
    const double ia = integrate(m, a);
    const double ib = integrate(m, b);
    if (a.leq(b)) {
      ++ordered;
      if (ia > ib + tol) bad.push_back({{"a", a.name()}, {"b", b.name()}, {"mu_a", ia}, {"mu_b", ib}, {"law", "monotone"}});
    }
    const double d = max_distance(a, b);
    if (std::abs(ia - ib) > d + tol)
      bad.push_back({{"a", a.name()}, {"b", b.name()}, {"mu_a", ia}, {"mu_b", ib}, {"distance", d}, {"law", "lipschitz"}});
  }
  rep.values = {{"pairs", pairs.size()}, {"ordered_pairs", ordered}, {"violations", bad.size()}};
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

Report staircase_check(const GridFunction& a, const GridFunction& b, double delta) {
  Report rep{"staircase", "a = sum a_i, b = sum b_i, a_i <= b_i + delta/n, a~_i (beta_i - beta_{i-1} - b~_i) = 0"};
  const auto d = staircase(a, b, delta);
  const auto r = staircase_residuals(a, b, d);
  // φ_i(ã) <= φ_i(b̃) is exact; the offsets M/n and (M + δ)/n then add up to
  // rounding, covered by the same 1e-12 allowance as the sums.
  bool ordered = r.order <= 1e-12;
  for (int i = 0; i < d.n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    for (std::size_t c = 0; c < a.values().size(); ++c)
      if (!(d.a_shifted[k].values()[c] <= d.b_shifted[k].values()[c])) ordered = false;
  }
  rep.values = {{"a", a.name()},          {"b", b.name()},         {"delta", delta},
                {"pieces", d.n},          {"shift", d.shift},      {"sum_a_residual", r.sum_a},
                {"sum_b_residual", r.sum_b}, {"order_excess", r.order}, {"product_residual", r.product}};
  if (r.sum_a > 1e-12 || r.sum_b > 1e-12 || !ordered || r.product != 0.0) fail_with(rep, rep.values);
  return rep;
}

bool is_subordinate(const GridFunction& k, const Image& u) {
  if (!u.is_open()) return false;
  for (CellIndex c = 0; c < k.grid().size(); ++c) {
    const double v = k[c];
    if (v < 0.0 || v > 1.0) return false;
    if (v != 0.0 && !u.cells.contains(c)) return false;
  }
  return true;
}

std::vector<GridFunction> plateau_subordinates(const Grid& g, const Image& u) {
  const CellSet inner1 = erode(g, u.cells, 1, EdgeMode::Relative);
  const CellSet inner2 = erode(g, u.cells, 2, EdgeMode::Relative);
  std::vector<double> ramp(g.size(), 0.0);
  inner1.for_each([&](CellIndex c) { ramp[c] = 0.5; });
  inner2.for_each([&](CellIndex c) { ramp[c] = 1.0; });
  return {GridFunction::indicator(g, inner2, "plateau:2"), GridFunction(g, std::move(ramp), "plateau:ramp"),
          GridFunction::indicator(g, inner1, "plateau:1")};
}

Report riesz_roundtrip_check(const QuasiMeasure& m, const std::vector<shapes::Named>& open_family,
                             const std::vector<std::vector<GridFunction>>& subordinates) {
  Report rep{"riesz_roundtrip", "mu(U) = sup of mu(k) over functions k subordinate to U"};
  if (open_family.size() != subordinates.size())
    throw PreconditionViolation("one list of subordinate functions per open image is required");
  const double tol = std::max(m.tolerance(), 1e-12);
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < open_family.size(); ++i) {
    const auto& u = open_family[i];
    double best = 0.0;
    std::string best_name;
    for (const auto& k : subordinates[i]) {
      if (!is_subordinate(k, u.image)) throw PreconditionViolation("'" + k.name() + "' is not subordinate to " + u.name);
      const double v = integrate(m, k);
      if (best_name.empty() || v > best) {
        best = v;
        best_name = k.name();
      }
    }
    const double mu = m.eval(u.image);
    rows.push_back({{"image", u.name}, {"measure", mu}, {"best_integral", best}, {"best_function", best_name}});
    if (std::abs(mu - best) > tol) bad.push_back(rows.back());
  }
  rep.values = {{"images", rows}};
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

}  // namespace qmlab
