#include "qmlab/transform_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "qmlab/errors.hpp"
#include "qmlab/integral.hpp"
#include "qmlab/integral_checks.hpp"
#include "qmlab/topology.hpp"

namespace qmlab {

namespace {

constexpr double kFloatTolerance = 1e-9;

void fail_with(Report& rep, nlohmann::json witness) {
  rep.status = Status::Fail;
  rep.witness = std::move(witness);
}

// Largest closed image topologically inside the open image v.
CellSet largest_closed_inside(const Grid& g, const CellSet& v) { return erode(g, v, 1, EdgeMode::Relative); }

}  // namespace

Report check_axioms(const ImageTransformation& q, const std::vector<shapes::DisjointPair>& pairs,
                    const std::vector<Image>& open_sets, const std::vector<int>& witness_depths) {
  Report rep{"transformation_axioms",
             "q(X) = Y, q(U) open, q(A + B) = q(A) + q(B), K inside q(U) is covered by q(L) for a compact L inside U"};
  const Grid& src = q.source();
  const Grid& tgt = q.target();
  nlohmann::json bad = nlohmann::json::array();

  for (const Kind k : {Kind::Open, Kind::Closed}) {
    if (!(q.apply(Image::whole(src, k)) == Image::whole(tgt, k)))
      bad.push_back({{"axiom", "whole_space"}, {"kind", to_string(k)}});
  }

  std::size_t additive = 0;
  for (const auto& p : pairs) {
    const auto joined = disjoint_union(src, p.a, p.b, p.union_kind);
    if (!joined) throw MalformedPair("pair '" + p.name + "' has no representable disjoint union");
    const Image qa = q.apply(p.a);
    const Image qb = q.apply(p.b);
    const Image qu = q.apply(*joined);
    if (qa.cells.intersects(qb.cells) || !(qu.cells == (qa.cells | qb.cells))) {
      bad.push_back({{"axiom", "additivity"}, {"pair", p.name}});
    } else {
      ++additive;
    }
  }

  nlohmann::json depths = nlohmann::json::array();
  for (const auto& u : open_sets) {
    if (!u.is_open()) throw PreconditionViolation("check_axioms: open_sets must hold open images");
    const Image qu = q.apply(u);
    if (!qu.is_open()) bad.push_back({{"axiom", "openness"}, {"image", image_json(src, u)}});
    const CellSet k = largest_closed_inside(tgt, qu.cells);
    int found = -1;
    for (const int d : witness_depths) {
      const Image l = Image::closed(erode(src, u.cells, d, EdgeMode::Relative));
      if (k.is_subset_of(q.apply(l).cells)) found = std::max(found, d);
    }
    depths.push_back(found);
    if (found < 0) bad.push_back({{"axiom", "regularity"}, {"image", image_json(src, u)}});
  }

  rep.values = {{"transformation", q.label()},
                {"pairs", pairs.size()},
                {"additive_pairs", additive},
                {"open_sets", open_sets.size()},
                {"deepest_witness", depths}};
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

Report derived_properties_check(const ImageTransformation& q, const std::vector<shapes::Named>& family,
                                const std::vector<std::vector<Image>>& chains) {
  Report rep{"transformation_properties",
             "q(A^c) = q(A)^c, A in B implies q(A) in q(B), disjoint A, B have disjoint images, q(U_k) increases to q(U)"};
  const Grid& src = q.source();
  const Grid& tgt = q.target();
  std::vector<Image> out;
  out.reserve(family.size());
  for (const auto& a : family) out.push_back(q.apply(a.image));
  nlohmann::json bad = nlohmann::json::array();
  std::size_t nested = 0;
  std::size_t separated = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!(q.apply(family[i].image.complement()) == out[i].complement()))
      bad.push_back({{"property", "complement"}, {"image", family[i].name}});
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      if (contains(src, family[j].image, family[i].image)) {
        ++nested;
        if (!contains(tgt, out[j], out[i]))
          bad.push_back({{"property", "monotone"}, {"inner", family[i].name}, {"outer", family[j].name}});
      }
      if (i < j && disjoint(src, family[i].image, family[j].image)) {
        ++separated;
        if (!disjoint(tgt, out[i], out[j]))
          bad.push_back({{"property", "disjoint"}, {"a", family[i].name}, {"b", family[j].name}});
      }
    }
  }
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const auto& chain = chains[c];
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (!contains(src, chain[k + 1], chain[k])) throw PreconditionViolation("chain is not increasing");
      if (!contains(tgt, q.apply(chain[k + 1]), q.apply(chain[k])))
        bad.push_back({{"property", "chain"}, {"chain", c}, {"step", k}});
    }
  }
  rep.values = {{"transformation", q.label()},
                {"images", family.size()},
                {"nested_pairs", nested},
                {"disjoint_pairs", separated},
                {"chains", chains.size()}};
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

Report change_of_variables_transform_check(const ImageTransformation& q, const QuasiMeasure& mu, const GridFunction& a) {
  Report rep{"transformation_change_of_variables", "(q* mu)(a) = mu(q(a))"};
  const double lhs = integrate(pullback(q, mu), a);
  const double rhs = integrate(mu, induced_function(q, a));
  const double tol = mu.exact() ? 0.0 : kFloatTolerance;
  rep.values = {{"transformation", q.label()}, {"measure", mu.label()}, {"function", a.name()},
                {"lhs", lhs},                  {"rhs", rhs},            {"discrepancy", std::abs(lhs - rhs)}};
  if (std::abs(lhs - rhs) > tol) fail_with(rep, rep.values);
  return rep;
}

Report composition_check(const ImageTransformation& p, const ImageTransformation& q, const std::vector<Image>& family,
                         const std::vector<GridFunction>& functions, const std::vector<QuasiMeasure>& measures) {
  Report rep{"composition", "(p o q)(A) = p(q(A)), r_(p o q) = r_p o r_q, (p o q)* = q* o p*"};
  const auto pq = compose(p, q);
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!(pq.apply(family[i]) == p.apply(q.apply(family[i])))) bad.push_back({{"identity", "images"}, {"index", i}});
  for (const auto& a : functions) {
    const auto lhs = induced_function(pq, a);
    const auto rhs = induced_function(p, induced_function(q, a));
    if (max_distance(lhs, rhs) != 0.0) bad.push_back({{"identity", "functional"}, {"function", a.name()}});
  }
  for (const auto& mu : measures) {
    const auto lhs = pullback(pq, mu);
    const auto rhs = pullback(q, pullback(p, mu));
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (lhs.eval(family[i]) != rhs.eval(family[i])) {
        bad.push_back({{"identity", "adjoint"}, {"measure", mu.label()}, {"index", i}});
        break;
      }
    }
  }
  rep.values = {{"outer", p.label()},
                {"inner", q.label()},
                {"images", family.size()},
                {"functions", functions.size()},
                {"measures", measures.size()}};
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

Report level_set_check(const ImageTransformation& q, const GridFunction& a,
                       const std::vector<std::function<double(double)>>& maps) {
  Report rep{"level_sets", "q(a <= t) = (q(a) <= t), q(a^{-1}(s, t)) = q(a)^{-1}(s, t), q(phi(a)) = phi(q(a))"};
  const auto qa = induced_function(q, a);
  const auto t = a.distinct_values();
  nlohmann::json bad = nlohmann::json::array();
  for (const double s : t)
    if (!(q.apply(sublevel(a, s)) == sublevel(qa, s))) bad.push_back({{"identity", "sublevel"}, {"t", s}});
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t stride = std::max<std::size_t>(1, t.size() / 8);
  for (std::size_t i = 0; i < t.size(); i += stride) {
    for (const double hi : {t[std::min(t.size() - 1, i + stride)], inf}) {
      if (!(q.apply(interval_preimage(a, t[i], hi)) == interval_preimage(qa, t[i], hi)))
        bad.push_back({{"identity", "interval"}, {"lo", t[i]}, {"hi", hi}});
    }
    if (!(q.apply(interval_preimage(a, -inf, t[i])) == interval_preimage(qa, -inf, t[i])))
      bad.push_back({{"identity", "interval"}, {"lo", -inf}, {"hi", t[i]}});
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const double d = max_distance(induced_function(q, a.map(maps[i])), qa.map(maps[i]));
    worst = std::max(worst, d);
    if (d > kFloatTolerance) bad.push_back({{"identity", "homomorphism"}, {"map", i}, {"distance", d}});
  }
  rep.values = {{"transformation", q.label()}, {"function", a.name()}, {"levels", t.size()}, {"homomorphism_distance", worst}};
  if (!bad.empty()) fail_with(rep, bad);
  return rep;
}

Factorization factorize(const ImageTransformation& q, const FiniteStarSample& sample,
                        const std::vector<Image>& match_family, const std::vector<Image>& verify_family) {
  if (!(sample.grid() == q.source())) throw SpaceMismatch("factorize: sample does not live on the source grid");
  const Grid& tgt = q.target();
  const auto signature = [&](const std::function<bool(std::size_t)>& bit) {
    std::string key(match_family.size(), '0');
    for (std::size_t i = 0; i < match_family.size(); ++i)
      if (bit(i)) key[i] = '1';
    return key;
  };
  std::unordered_map<std::string, std::size_t> by_signature;
  std::size_t ambiguous = 0;
  for (std::size_t m = 0; m < sample.size(); ++m) {
    const auto& mu = sample.members()[m].measure;
    const auto key = signature([&](std::size_t i) {
      const double v = mu.eval(match_family[i]);
      if (v != 0.0 && v != 1.0) throw PreconditionViolation("sample member '" + sample.members()[m].label + "' is not simple");
      return v == 1.0;
    });
    if (!by_signature.emplace(key, m).second) ++ambiguous;
  }
  std::vector<CellSet> images;
  images.reserve(match_family.size());
  for (const auto& a : match_family) images.push_back(q.apply(a).cells);

  Factorization f;
  std::vector<std::size_t> w_index(tgt.size());
  for (CellIndex y = 0; y < tgt.size(); ++y) {
    const auto key = signature([&](std::size_t i) { return images[i].contains(y); });
    const auto it = by_signature.find(key);
    if (it == by_signature.end()) {
      const auto label = q.target_labels()[y];
      throw UncoveredPoint(y, "no sample member matches the pullback of the point mass at " + label);
    }
    w_index[y] = it->second;
    f.w.push_back(sample.members()[it->second].label);
  }

  f.residual = Report{"factorization", "q = w^{-1} o [*] on the sample"};
  std::size_t mismatched = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < verify_family.size(); ++i) {
    const CellSet actual = q.apply(verify_family[i]).cells;
    CellSet predicted = tgt.none();
    for (CellIndex y = 0; y < tgt.size(); ++y)
      if (sample.members()[w_index[y]].measure.eval(verify_family[i]) == 1.0) predicted.insert(y);
    const std::size_t diff = ((actual - predicted) | (predicted - actual)).count();
    if (diff > 0) {
      mismatched += diff;
      bad.push_back({{"index", i}, {"cells", diff}});
    }
  }
  f.residual.values = {{"transformation", q.label()},
                       {"sample_size", sample.size()},
                       {"match_family", match_family.size()},
                       {"verify_family", verify_family.size()},
                       {"indistinguishable_members", ambiguous},
                       {"residual_cells", mismatched}};
  if (!bad.empty()) fail_with(f.residual, bad);
  return f;
}

Reconstruction reconstruct_from_homomorphism(const Grid& source, const Grid& target, const Functional& r,
                                             const std::vector<GridFunction>& basis) {
  const auto checked = [&](const GridFunction& a) {
    auto v = r(a);
    if (!(v.grid() == target)) throw SpaceMismatch("functional does not land on the target grid");
    return v;
  };
  const auto one = checked(GridFunction::constant(source, 1.0));
  for (const double v : one.values())
    if (std::abs(v - 1.0) > kFloatTolerance) throw NotAQuasiHomomorphism("r(1) is not 1 at every target point");
  const std::vector<std::pair<ValueMap, ValueMap>> products{
      {{"t", [](double t) { return t; }}, {"t", [](double t) { return t; }}},
      {{"t", [](double t) { return t; }}, {"t^2+1", [](double t) { return t * t + 1; }}},
      {{"1-t", [](double t) { return 1 - t; }}, {"2t", [](double t) { return 2 * t; }}},
  };
  for (const auto& a : basis) {
    if (!(a.grid() == source)) throw SpaceMismatch("basis function does not live on the source grid");
    for (const auto& [phi, psi] : products) {
      const auto fa = a.map(phi.f);
      const auto ga = a.map(psi.f);
      const auto lhs = checked(fa * ga);
      const auto rhs = checked(fa) * checked(ga);
      if (max_distance(lhs, rhs) > kFloatTolerance)
        throw NotAQuasiHomomorphism("r is not multiplicative on the algebra of '" + a.name() + "' (" + phi.name + " * " +
                                    psi.name + ")");
    }
  }

  auto open_part = [source, target, r](const CellSet& u) {
    const Image uo = Image::open(u);
    std::vector<GridFunction> ks = plateau_subordinates(source, uo);
    ks.push_back(GridFunction::indicator(source, u, "indicator"));
    CellSet out = target.none();
    for (const auto& k : ks) {
      const auto rk = r(k);
      for (CellIndex y = 0; y < target.size(); ++y)
        if (rk[y] > 0.0) out.insert(y);
    }
    return out;
  };
  auto map = [open_part](const Image& a) {
    if (a.is_open()) return Image::open(open_part(a.cells));
    return Image::closed(open_part(a.cells.complement()).complement());
  };
  Reconstruction out{ImageTransformation::from_function(source, target, map, "reconstructed"),
                     Report{"reconstruction", "q(U) = union over k subordinate to U of {r(k) > 0} induces r"}};
  double worst = 0.0;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& a : basis) {
    const double d = max_distance(induced_function(out.q, a), checked(a));
    worst = std::max(worst, d);
    if (d > kFloatTolerance) bad.push_back({{"function", a.name()}, {"distance", d}});
  }
  out.report.values = {{"basis", basis.size()}, {"max_distance", worst}};
  if (!bad.empty()) fail_with(out.report, bad);
  return out;
}

}  // namespace qmlab
