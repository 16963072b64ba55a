#include "qmlab/measure_checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qmlab/errors.hpp"
#include "qmlab/topology.hpp"

namespace qmlab {

namespace {

bool is_zero_one(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

bool is_simple(const QuasiMeasure& m, const std::vector<Image>& family) {
  return std::all_of(family.begin(), family.end(), [&](const Image& a) { return is_zero_one(m.eval(a)); });
}

Report check_additivity(const QuasiMeasure& m, const std::vector<shapes::DisjointPair>& pairs) {
  Report rep{"additivity", "mu(A + B) = mu(A) + mu(B) for disjoint images A, B"};
  const auto& g = m.grid();
  const double tol = m.tolerance();
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& p : pairs) {
    const auto joined = disjoint_union(g, p.a, p.b, p.union_kind);
    if (!joined) throw MalformedPair("pair '" + p.name + "' overlaps or its union is not a " +
                                     std::string(to_string(p.union_kind)) + " image");
    const double va = m.eval(p.a);
    const double vb = m.eval(p.b);
    const double vu = m.eval(*joined);
    if (std::abs(vu - va - vb) > tol)
      bad.push_back({{"pair", p.name}, {"a", va}, {"b", vb}, {"union", vu}});
  }
  rep.values["pairs"] = pairs.size();
  rep.values["violations"] = bad.size();
  if (!bad.empty()) {
    rep.status = Status::Fail;
    rep.witness = bad;
  }
  return rep;
}

Report check_complementation(const QuasiMeasure& m, const std::vector<shapes::Named>& family) {
  Report rep{"complementation", "mu(X) = 1, 0 <= mu(A) <= 1 and mu(A) + mu(A^c) = 1"};
  const auto& g = m.grid();
  const double tol = m.tolerance();
  nlohmann::json bad = nlohmann::json::array();
  for (const Kind k : {Kind::Open, Kind::Closed}) {
    const double vx = m.eval(Image::whole(g, k));
    if (std::abs(vx - 1.0) > tol) bad.push_back({{"image", "X#" + std::string(to_string(k))}, {"value", vx}});
  }
  for (const auto& a : family) {
    const double v = m.eval(a.image);
    const double vc = m.eval(a.image.complement());
    if (v < -tol || v > 1.0 + tol || std::abs(v + vc - 1.0) > tol)
      bad.push_back({{"image", a.name}, {"value", v}, {"complement", vc}});
  }
  rep.values["images"] = family.size();
  rep.values["violations"] = bad.size();
  if (!bad.empty()) {
    rep.status = Status::Fail;
    rep.witness = bad;
  }
  return rep;
}

Report check_monotonicity(const QuasiMeasure& m, const std::vector<shapes::Named>& family) {
  Report rep{"monotonicity", "A subset of B implies mu(A) <= mu(B)"};
  const auto& g = m.grid();
  const double tol = m.tolerance();
  std::vector<double> v;
  v.reserve(family.size());
  for (const auto& a : family) v.push_back(m.eval(a.image));
  std::size_t compared = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j || !contains(g, family[j].image, family[i].image)) continue;
      ++compared;
      if (v[i] > v[j] + tol) bad.push_back({{"inner", family[i].name}, {"outer", family[j].name}, {"inner_value", v[i]}, {"outer_value", v[j]}});
    }
  }
  rep.values["contained_pairs"] = compared;
  rep.values["violations"] = bad.size();
  if (!bad.empty()) {
    rep.status = Status::Fail;
    rep.witness = bad;
  }
  return rep;
}

Report check_chain_continuity(const QuasiMeasure& m, const std::vector<Image>& chain) {
  Report rep{"chain_continuity", "U_k increasing to U implies mu(U_k) increasing to mu(U)"};
  const auto& g = m.grid();
  const double tol = m.tolerance();
  nlohmann::json values = nlohmann::json::array();
  bool ok = true;
  double prev = -1.0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!chain[i].is_open()) throw PreconditionViolation("chain members must be open");
    if (i > 0 && !contains(g, chain[i], chain[i - 1])) throw PreconditionViolation("chain is not increasing");
    const double v = m.eval(chain[i]);
    values.push_back(v);
    if (v < prev - tol) ok = false;
    prev = v;
  }
  rep.values["values"] = values;
  if (!ok) {
    rep.status = Status::Fail;
    rep.witness = values;
  }
  return rep;
}

Report check_regularity(const QuasiMeasure& m, const Image& u, const std::vector<int>& witness_depths) {
  if (!u.is_open()) throw PreconditionViolation("check_regularity needs an open image");
  Report rep{"regularity", "mu(U) = sup of mu(K) over compact K inside U (erosion witnesses)"};
  const auto& g = m.grid();
  const double target = m.eval(u);
  double best = 0.0;
  int best_depth = -1;
  nlohmann::json per_depth = nlohmann::json::object();
  for (const int d : witness_depths) {
    const Image k = Image::closed(erode(g, u.cells, d, EdgeMode::Relative));
    const double v = m.eval(k);
    per_depth[std::to_string(d)] = v;
    if (best_depth < 0 || v > best) {
      best = v;
      best_depth = d;
    }
  }
  rep.values["open_value"] = target;
  rep.values["best_witness"] = best;
  rep.values["best_depth"] = best_depth;
  rep.values["witness_values"] = per_depth;
  if (std::abs(best - target) > m.tolerance()) {
    rep.status = Status::Fail;
    rep.witness = image_json(g, u);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Non-subadditivity search

namespace {

struct Candidate {
  std::string origin;
  CellSet a;
  CellSet b;
};

std::vector<Candidate> template_candidates(const Grid& g, const DistinguishedGeometry& geo) {
  std::vector<Candidate> out;
  out.push_back({"half_ring:left+half_ring:right", shapes::half_ring(g, true), shapes::half_ring(g, false)});
  // Split lenses: each half holds one marked point, the halves overlap by two
  // cells around the midpoint.
  const double step = 1.0 / (g.cols() - 1);
  const char* names = "pqr";
  for (std::size_t i = 0; i < geo.marked.size(); ++i) {
    for (std::size_t j = i + 1; j < geo.marked.size(); ++j) {
      const auto pi = g.unit_point(geo.marked[i]);
      const auto pj = g.unit_point(geo.marked[j]);
      const double len = std::hypot(pj.x - pi.x, pj.y - pi.y);
      const double ux = (pj.x - pi.x) / len;
      const double uy = (pj.y - pi.y) / len;
      const Point mid{(pi.x + pj.x) / 2, (pi.y + pj.y) / 2};
      const double overlap = 2 * step;
      const Point a_end{mid.x + overlap * ux, mid.y + overlap * uy};
      const Point b_start{mid.x - overlap * ux, mid.y - overlap * uy};
      const double radius = std::max(0.05, 1.5 * step);
      out.push_back({std::string("split_lens:") + names[i] + "," + names[j], shapes::stadium(g, pi, a_end, radius),
                     shapes::stadium(g, b_start, pj, radius)});
    }
  }
  // A bar from the bottom edge towards the center, and a disk on the center.
  const int h = g.rows() / 2;
  CellSet bar = g.none();
  for (int r = h + 1; r < g.rows(); ++r) bar.insert(g.index(r, g.cols() / 2));
  out.push_back({"bar+center", bar, CellSet::of(g.size(), {geo.center})});
  return out;
}

CellIndex random_start(const Grid& g, const DistinguishedGeometry& geo, std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return geo.center;
    case 1: {
      const auto border = geo.border.indices();
      return border[rng() % border.size()];
    }
    case 2:
      if (!geo.marked.empty()) return geo.marked[rng() % geo.marked.size()];
      [[fallthrough]];
    default:
      return static_cast<CellIndex>(rng() % g.size());
  }
}

}  // namespace

std::optional<NonSubadditiveWitness> find_nonsubadditive_witness(const QuasiMeasure& m,
                                                                 const DistinguishedGeometry& geo,
                                                                 const WitnessSearch& search) {
  const auto& g = m.grid();
  const double tol = std::max(m.tolerance(), 1e-12);
  std::size_t tried = 0;
  const auto test = [&](const Candidate& c) -> std::optional<NonSubadditiveWitness> {
    ++tried;
    NonSubadditiveWitness w{Image::closed(c.a), Image::closed(c.b), Image::closed(c.a | c.b), 0.0, 0.0, 0.0, c.origin, 0};
    w.value_a = m.eval(w.a);
    w.value_b = m.eval(w.b);
    w.value_joined = m.eval(w.joined);
    w.candidates = tried;
    if (w.value_joined > w.value_a + w.value_b + tol) return w;
    return std::nullopt;
  };

  if (search.templates) {
    for (const auto& c : template_candidates(g, geo)) {
      if (tried >= search.budget) return std::nullopt;
      if (auto w = test(c)) return w;
    }
  }
  std::mt19937_64 rng(search.seed);
  const std::size_t max_size = std::max<std::size_t>(2, g.size() / 4);
  while (tried < search.budget) {
    const auto sa = 1 + static_cast<std::size_t>(rng() % max_size);
    const auto start_a = random_start(g, geo, rng);
    const auto seed_a = rng();
    const auto sb = 1 + static_cast<std::size_t>(rng() % max_size);
    const auto start_b = random_start(g, geo, rng);
    const auto seed_b = rng();
    Candidate c{"random", shapes::blob(g, seed_a, sa, start_a), shapes::blob(g, seed_b, sb, start_b)};
    if (auto w = test(c)) return w;
  }
  return std::nullopt;
}

Report dirac_characterization_check(const QuasiMeasure& m, const std::vector<std::pair<Image, Image>>& pairs) {
  Report rep{"dirac_characterization", "a simple quasi-measure subadditive on open sets is a point mass"};
  const auto& g = m.grid();
  const double tol = std::max(m.tolerance(), 1e-12);
  std::vector<Image> closed_family;
  bool simple = true;
  std::size_t skipped = 0;
  for (const auto& [u, v] : pairs) {
    const auto w = open_union(g, u, v);
    if (!w) {
      ++skipped;
      continue;
    }
    const double mu = m.eval(u);
    const double mv = m.eval(v);
    const double mw = m.eval(*w);
    simple = simple && is_zero_one(mu) && is_zero_one(mv) && is_zero_one(mw);
    if (mw > mu + mv + tol) {
      rep.values["subadditive"] = false;
      rep.values["u"] = mu;
      rep.values["v"] = mv;
      rep.values["union"] = mw;
      rep.witness = nlohmann::json{{"u", image_json(g, u)}, {"v", image_json(g, v)}};
      return rep;
    }
    for (const auto* img : {&u, &v, &*w}) closed_family.push_back(img->complement());
  }
  rep.values["subadditive"] = true;
  rep.values["pairs_skipped"] = skipped;
  if (!simple) {
    rep.status = Status::Inconclusive;
    rep.values["reason"] = "not simple on the family";
    return rep;
  }
  CellSet candidate = g.all();
  for (const auto& f : closed_family)
    if (m.eval(f) == 1.0) candidate &= f.cells;
  std::vector<CellIndex> points;
  candidate.for_each([&](CellIndex c) {
    if (m.eval(Image::closed(CellSet::of(g.size(), {c}))) == 1.0) points.push_back(c);
  });
  rep.values["candidate_cells"] = candidate.count();
  if (points.size() != 1) {
    rep.status = Status::Inconclusive;
    rep.values["reason"] = points.empty() ? "no cell of measure one in the intersection" : "several cells of measure one";
    return rep;
  }
  const auto rc = g.position(points.front());
  rep.values["point"] = {rc.row, rc.col};
  return rep;
}

}  // namespace qmlab
