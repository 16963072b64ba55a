#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "qmlab/errors.hpp"
#include "qmlab/integral.hpp"
#include "qmlab/integral_checks.hpp"
#include "qmlab/measure_checks.hpp"
#include "qmlab/shapes.hpp"
#include "qmlab/staircase.hpp"
#include "qmlab/topology.hpp"
#include "qmlab/transform_checks.hpp"

namespace qmlab::cli {

namespace {

using nlohmann::json;

// Images and pairs shared by the suites.
struct Fixtures {
  std::vector<shapes::Named> family;
  std::vector<Image> family_images;
  std::vector<shapes::DisjointPair> pairs;
  std::vector<shapes::Named> open_family;
  std::vector<Image> open_images;
  std::vector<std::vector<Image>> open_chains;
  std::vector<std::pair<Image, Image>> open_pairs;
  std::vector<Image> coordinate_sublevels;

  explicit Fixtures(const Scene& s) {
    const auto& g = s.grid();
    family = shapes::standard_family(g, s.geometry());
    for (const auto& a : family) family_images.push_back(a.image);
    pairs = shapes::disjoint_pairs(g, family);
    open_family = shapes::open_family(g, s.geometry());
    for (const auto& u : open_family) {
      open_images.push_back(u.image);
      std::vector<Image> chain;
      for (int d = 3; d >= 0; --d) chain.push_back(Image::open(erode(g, u.image.cells, d, EdgeMode::Relative)));
      open_chains.push_back(std::move(chain));
    }
    open_pairs = shapes::open_pairs(g, s.geometry());
    for (const auto& f : {GridFunction::coords_x(g), GridFunction::coords_y(g)})
      for (const double t : f.distinct_values()) coordinate_sublevels.push_back(sublevel(f, t));
  }
};

// Deterministic random dyadic functions built from the builtin shapes, so that
// the number of distinct values stays small and arithmetic stays exact. Only
// functions with well-composed level sets are drawn.
class FunctionSampler {
 public:
  FunctionSampler(const Grid& g, std::uint64_t seed)
      : rng_(seed),
        basis_{GridFunction::pyramid(g), GridFunction::coords_x(g), GridFunction::coords_y(g), GridFunction::plane_b(g)},
        grid_(g) {}

  // Redraws until every level set is well-composed.
  GridFunction any(const std::string& name) {
    for (;;) {
      GridFunction f = GridFunction::constant(grid_, coefficient());
      for (const auto& b : basis_) f = f + coefficient() * b;
      if (is_well_composed(f)) return f.renamed(name);
    }
  }

  GridFunction above(const GridFunction& a, const std::string& name) {
    for (;;) {
      GridFunction f = a + std::abs(coefficient());
      for (const auto& b : basis_) f = f + std::abs(coefficient()) * b;
      if (is_well_composed(f)) return f.renamed(name);
    }
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  double coefficient() { return static_cast<double>(static_cast<int>(rng_() % 9) - 4) / 4.0; }

  std::mt19937_64 rng_;
  std::vector<GridFunction> basis_;
  Grid grid_;
};

std::string subject_id(const std::string& suite, const std::string& subject, const std::string& check) {
  return suite + "/" + subject + "/" + check;
}

Report errored(const std::string& check, const std::string& what) {
  Report r{check, "check raised an error"};
  r.status = Status::Fail;
  r.values = {{"error", what}};
  r.witness = r.values;
  return r;
}

// Runs `body` and tags its report; errors become failed reports.
void add(std::vector<Report>& out, const std::string& suite, const std::string& subject,
         const std::function<Report()>& body) {
  Report r;
  try {
    r = body();
  } catch (const Error& e) {
    r = errored("error", e.what());
  }
  r.check = subject_id(suite, subject, r.check);
  r.values["subject"] = subject;
  out.push_back(std::move(r));
}

// Folds many small reports into one: the status combines, failures are kept.
Report aggregate(std::string check, std::string property, const std::vector<Report>& parts) {
  Report r{std::move(check), std::move(property)};
  r.status = combine(parts);
  json failures = json::array();
  for (const auto& p : parts)
    if (p.status == Status::Fail) failures.push_back(p.witness ? *p.witness : p.values);
  r.values = {{"cases", parts.size()}, {"failures", failures.size()}};
  if (!failures.empty()) r.witness = failures;
  return r;
}

bool is_rule_variant(const QuasiMeasure& m, SolidRule::Variant v) { return m.rule() && m.rule()->variant() == v; }

bool simple_on(const QuasiMeasure& m, const Fixtures& fx) { return is_simple(m, fx.family_images); }

std::vector<QuasiMeasure> measures_on(const Scene& s, const Grid& g) {
  std::vector<QuasiMeasure> out;
  if (g == s.grid()) {
    for (const auto& name : s.measure_names()) out.push_back(s.measure(name));
    return out;
  }
  for (CellIndex c = 0; c < g.size(); ++c) out.push_back(QuasiMeasure::dirac(g, c));
  if (g.size() >= 2) out.push_back(QuasiMeasure::mixture({0.5, 0.5}, {out[0], out[1]}));
  return out;
}

// ---------------------------------------------------------------------------

void measure_axioms(const Scene& s, const Fixtures& fx, const SuiteOptions& opt, std::vector<Report>& out) {
  const std::string suite = "measure-axioms";
  const auto& g = s.grid();
  for (const auto& name : s.measure_names()) {
    const auto m = s.measure(name);
    add(out, suite, name, [&] { return check_complementation(m, fx.family); });
    add(out, suite, name, [&] { return check_additivity(m, fx.pairs); });
    add(out, suite, name, [&] { return check_monotonicity(m, fx.family); });
    add(out, suite, name, [&] {
      std::vector<Report> parts;
      for (const auto& u : fx.open_images) parts.push_back(check_regularity(m, u, {0, 1, 2}));
      return aggregate("regularity", "mu(U) = sup of mu(K) over compact K inside U (erosion witnesses)", parts);
    });
    add(out, suite, name, [&] {
      std::vector<Report> parts;
      for (const auto& chain : fx.open_chains) parts.push_back(check_chain_continuity(m, chain));
      return aggregate("chain_continuity", "U_k increasing to U implies mu(U_k) increasing to mu(U)", parts);
    });
    if (const auto* rule = m.rule()) {
      add(out, suite, name, [&] {
        Report r{"simplicity", "a solid-rule quasi-measure takes only the values 0 and 1"};
        const bool simple = simple_on(m, fx);
        r.values = {{"images", fx.family.size()}, {"simple", simple}};
        if (!simple) {
          r.status = Status::Fail;
          r.witness = r.values;
        }
        return r;
      });
      if (!g.is_discrete()) {
        add(out, suite, name, [&] {
          Report r{"extension_chain", "the component-graph evaluator agrees with the literal extension chain"};
          json bad = json::array();
          for (const auto& a : fx.family)
            if (m.eval(a.image) != eval_reference(g, *rule, a.image)) bad.push_back(a.name);
          r.values = {{"images", fx.family.size()}, {"disagreements", bad.size()}};
          if (!bad.empty()) {
            r.status = Status::Fail;
            r.witness = bad;
          }
          return r;
        });
      }
    }
    add(out, suite, name, [&] {
      Report r{"nonsubadditive_witness", "closed A, B with mu(A u B) > mu(A) + mu(B) exist iff mu is not a measure"};
      const auto w = find_nonsubadditive_witness(m, s.geometry(), {opt.budget, opt.seed, true});
      const bool point_mass = is_rule_variant(m, SolidRule::Variant::DiracAt);
      const bool proper = is_rule_variant(m, SolidRule::Variant::AarnesSquare) ||
                          is_rule_variant(m, SolidRule::Variant::ThreePoint);
      r.values = {{"found", w.has_value()}, {"budget", opt.budget}, {"seed", opt.seed}};
      if (w) {
        r.values["origin"] = w->origin;
        r.values["candidates"] = w->candidates;
        r.values["values"] = {w->value_a, w->value_b, w->value_joined};
        r.witness = json{{"a", image_json(g, w->a)}, {"b", image_json(g, w->b)}};
      }
      if ((point_mass && w) || (proper && !w)) {
        r.status = Status::Fail;
        if (!r.witness) r.witness = r.values;
      }
      return r;
    });
    if (m.rule()) {
      add(out, suite, name, [&] {
        Report r = dirac_characterization_check(m, fx.open_pairs);
        const bool subadditive = r.values.value("subadditive", true);
        if (is_rule_variant(m, SolidRule::Variant::DiracAt)) {
          const auto rc = g.position(m.rule()->points().front());
          if (r.status == Status::Pass && r.values.at("point") != json::array({rc.row, rc.col})) {
            r.status = Status::Fail;
            r.witness = r.values;
          }
        } else if (subadditive && r.status == Status::Pass) {
          // A proper quasi-measure must not be recognized as a point mass.
          r.status = Status::Fail;
          r.witness = r.values;
        }
        return r;
      });
    }
  }
}

void integral_props(const Scene& s, const Fixtures& fx, const SuiteOptions& opt, std::vector<Report>& out) {
  const std::string suite = "integral-props";
  const auto& g = s.grid();
  const auto maps = standard_value_maps();
  std::vector<GridFunction> functions;
  for (const auto& name : s.function_names()) functions.push_back(s.function(name));
  if (functions.empty()) functions.push_back(GridFunction::pyramid(g));

  for (const auto& name : s.measure_names()) {
    const auto m = s.measure(name);
    if (is_rule_variant(m, SolidRule::Variant::AarnesSquare)) {
      add(out, suite, name, [&] {
        Report r{"nonlinear_integral", "mu(a) = 0, mu(b) = 0, mu(a + b) = 1 for the pyramid a and the plane b"};
        const auto a = GridFunction::pyramid(g);
        const auto b = GridFunction::plane_b(g);
        const double ia = integrate(m, a);
        const double ib = integrate(m, b);
        const double iab = integrate(m, a + b);
        r.values = {{"pyramid", ia}, {"plane_b", ib}, {"pyramid_plus_plane", iab}};
        if (ia != 0.0 || ib != 0.0 || iab != 1.0) {
          r.status = Status::Fail;
          r.witness = r.values;
        }
        return r;
      });
      add(out, suite, name, [&] {
        Report r{"pyramid_distribution", "the distribution of the pyramid is the point mass at 0"};
        const auto d = pushforward_distribution(m, GridFunction::pyramid(g));
        json jumps = json::array();
        for (const auto& j : d.jumps) jumps.push_back({j.t, j.mass});
        r.values = {{"jumps", jumps}};
        if (d.jumps.size() != 1 || d.jumps[0].t != 0.0 || d.jumps[0].mass != 1.0) {
          r.status = Status::Fail;
          r.witness = r.values;
        }
        return r;
      });
    }
    add(out, suite, name, [&] {
      std::vector<Report> parts;
      for (const auto& a : functions)
        for (const auto& phi : maps) parts.push_back(change_of_variables_check(m, a, phi));
      return aggregate("change_of_variables", "mu(phi(a)) = integral of phi against mu_a", parts);
    });
    add(out, suite, name, [&] {
      std::vector<Report> parts;
      const std::vector<std::pair<std::size_t, std::size_t>> combos{{0, 4}, {0, 1}, {2, 3}, {7, 8}, {5, 6}};
      for (const auto& a : functions)
        for (const auto& [i, j] : combos) parts.push_back(quasi_linearity_check(m, a, maps[i], maps[j]));
      return aggregate("quasi_linearity", "mu linear on the algebra generated by a, positive and normalized", parts);
    });
    const bool simple = simple_on(m, fx);
    if (simple) {
      add(out, suite, name, [&] {
        FunctionSampler sampler(g, opt.seed);
        std::vector<Report> parts;
        for (int k = 0; k < 20; ++k) {
          const auto a = sampler.any("sample" + std::to_string(k));
          const auto& phi = maps[sampler.index(maps.size())];
          const auto& psi = maps[sampler.index(maps.size())];
          parts.push_back(multiplicativity_check(m, a, phi, psi));
        }
        return aggregate("simple_multiplicativity", "sigma(phi(a) psi(a)) = sigma(phi(a)) sigma(psi(a)) for simple sigma", parts);
      });
      add(out, suite, name, [&] {
        Report r{"simple_value", "the distribution of a under a simple measure is a single point mass"};
        json bad = json::array();
        for (const auto& a : functions) {
          const double sv = simple_value(m, a);
          const double iv = integrate(m, a);
          const auto d = pushforward_distribution(m, a);
          if (sv != iv || d.jumps.size() != 1) bad.push_back({{"function", a.name()}, {"simple_value", sv}, {"integral", iv}});
        }
        r.values = {{"functions", functions.size()}, {"failures", bad.size()}};
        if (!bad.empty()) {
          r.status = Status::Fail;
          r.witness = bad;
        }
        return r;
      });
    }
    add(out, suite, name, [&] {
      FunctionSampler sampler(g, opt.seed + 1);
      std::vector<std::pair<GridFunction, GridFunction>> pairs;
      for (int k = 0; k < 12; ++k) {
        auto a = sampler.any("a" + std::to_string(k));
        auto b = sampler.above(a, "b" + std::to_string(k));
        pairs.emplace_back(std::move(a), std::move(b));
      }
      for (int k = 0; k < 8; ++k) pairs.emplace_back(sampler.any("c" + std::to_string(k)), sampler.any("d" + std::to_string(k)));
      return functional_bounds_check(m, pairs);
    });
    add(out, suite, name, [&] {
      Report r{"distribution_consistency", "for increasing phi the distribution of phi(a) is the image of mu_a under phi"};
      const std::vector<ValueMap> monotone{{"t^3", [](double t) { return t * t * t; }},
                                           {"2t+1", [](double t) { return 2 * t + 1; }},
                                           {"exp", [](double t) { return std::exp(t); }, false}};
      json bad = json::array();
      for (const auto& a : functions) {
        const auto da = pushforward_distribution(m, a);
        for (const auto& phi : monotone) {
          const auto dp = pushforward_distribution(m, a.map(phi.f));
          bool same = dp.jumps.size() == da.jumps.size();
          const double tol = phi.polynomial ? std::max(m.tolerance(), 0.0) : 1e-9;
          for (std::size_t k = 0; same && k < da.jumps.size(); ++k)
            same = std::abs(dp.jumps[k].t - phi.f(da.jumps[k].t)) <= tol &&
                   std::abs(dp.jumps[k].mass - da.jumps[k].mass) <= std::max(m.tolerance(), 1e-12);
          if (!same) bad.push_back({{"function", a.name()}, {"phi", phi.name}});
        }
      }
      r.values = {{"cases", functions.size() * monotone.size()}, {"failures", bad.size()}};
      if (!bad.empty()) {
        r.status = Status::Fail;
        r.witness = bad;
      }
      return r;
    });
    add(out, suite, name, [&] {
      Report r{"monotone_convergence", "a_k increasing to a implies mu(a_k) increasing to mu(a)"};
      json bad = json::array();
      for (const auto& a : functions) {
        const auto t = a.distinct_values();
        double prev = -std::numeric_limits<double>::infinity();
        bool ok = true;
        double last = 0.0;
        const std::size_t steps = 6;
        for (std::size_t k = 0; k <= steps; ++k) {
          const double cap = t[k * (t.size() - 1) / steps];
          last = integrate(m, a.map([cap](double x) { return std::min(x, cap); }));
          ok = ok && last >= prev - std::max(m.tolerance(), 1e-12);
          prev = last;
        }
        ok = ok && std::abs(last - integrate(m, a)) <= m.tolerance();
        if (!ok) bad.push_back(a.name());
      }
      r.values = {{"functions", functions.size()}, {"failures", bad.size()}};
      if (!bad.empty()) {
        r.status = Status::Fail;
        r.witness = bad;
      }
      return r;
    });
  }
  add(out, suite, "functions", [&] {
    FunctionSampler sampler(g, opt.seed + 2);
    std::vector<Report> parts;
    for (int k = 0; k < 10; ++k) {
      const auto a = sampler.any("a" + std::to_string(k));
      const auto b = sampler.above(a, "b" + std::to_string(k));
      for (const double delta : {1.0, 0.1}) parts.push_back(staircase_check(a, b, delta));
    }
    return aggregate("staircase", "a = sum a_i, b = sum b_i, a_i <= b_i + delta/n with clamped pieces", parts);
  });
  add(out, suite, "functions", [&] {
    Report r{"spectrum", "the spectrum of a is the closure of its range"};
    json sizes = json::object();
    for (const auto& a : functions) sizes[a.name()] = spectrum(a).size();
    r.values = {{"spectrum_sizes", sizes}};
    return r;
  });
}

void transform_axioms(const Scene& s, const Fixtures& fx, const SuiteOptions&, std::vector<Report>& out) {
  const std::string suite = "transform-axioms";
  const auto& g = s.grid();
  std::vector<GridFunction> functions;
  for (const auto& name : s.function_names()) functions.push_back(s.function(name));
  if (functions.empty()) functions.push_back(GridFunction::pyramid(g));
  const std::vector<std::function<double(double)>> maps{[](double t) { return t * t; },
                                                        [](double t) { return 2 * t + 1; },
                                                        [](double t) { return std::sin(t); }};
  for (const auto& name : s.transform_names()) {
    const auto q = s.transform(name);
    add(out, suite, name, [&] { return check_axioms(q, fx.pairs, fx.open_images); });
    add(out, suite, name, [&] { return derived_properties_check(q, fx.family, fx.open_chains); });
    add(out, suite, name, [&] {
      Report r{"pullback_simplicity", "the pullback of a point mass is a simple quasi-measure"};
      const auto& tg = q.target();
      json bad = json::array();
      std::set<CellIndex> probes{0, tg.size() / 2, tg.size() - 1};
      for (const CellIndex y : probes)
        if (!is_simple(pullback(q, QuasiMeasure::dirac(tg, y)), fx.family_images)) bad.push_back(y);
      r.values = {{"points", probes.size()}, {"failures", bad.size()}};
      if (!bad.empty()) {
        r.status = Status::Fail;
        r.witness = bad;
      }
      return r;
    });
    add(out, suite, name, [&] {
      std::vector<Report> parts;
      for (const auto& mu : measures_on(s, q.target()))
        for (const auto& a : functions) parts.push_back(change_of_variables_transform_check(q, mu, a));
      return aggregate("change_of_variables", "(q* mu)(a) = mu(q(a))", parts);
    });
    add(out, suite, name, [&] {
      std::vector<Report> parts;
      for (const auto& a : functions) parts.push_back(level_set_check(q, a, maps));
      return aggregate("level_sets", "q(a <= t) = (q(a) <= t) and q(phi(a)) = phi(q(a))", parts);
    });
  }
  const std::vector<Image> sample_images(fx.family_images.begin(),
                                         fx.family_images.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(20, fx.family_images.size())));
  for (const auto& outer : s.transform_names()) {
    for (const auto& inner : s.transform_names()) {
      const auto p = s.transform(outer);
      const auto q = s.transform(inner);
      if (!(q.target() == p.source())) continue;
      add(out, suite, outer + "*" + inner, [&] {
        std::vector<QuasiMeasure> measures = measures_on(s, p.target());
        if (measures.size() > 4) measures.erase(measures.begin() + 4, measures.end());
        std::vector<Image> images;
        for (const auto& a : sample_images) images.push_back(a);
        return composition_check(p, q, images, functions, measures);
      });
    }
  }
}

void riesz(const Scene& s, const Fixtures& fx, const SuiteOptions&, std::vector<Report>& out) {
  const std::string suite = "riesz";
  std::vector<std::vector<GridFunction>> subordinates;
  for (const auto& u : fx.open_family) subordinates.push_back(plateau_subordinates(s.grid(), u.image));
  for (const auto& name : s.measure_names()) {
    const auto m = s.measure(name);
    add(out, suite, name, [&] { return riesz_roundtrip_check(m, fx.open_family, subordinates); });
  }
}

void factorization(const Scene& s, const Fixtures& fx, const SuiteOptions&, std::vector<Report>& out) {
  const std::string suite = "factorization";
  const auto& g = s.grid();
  std::vector<Image> match = fx.family_images;
  match.insert(match.end(), fx.coordinate_sublevels.begin(), fx.coordinate_sublevels.end());
  std::vector<Image> verify = match;
  verify.insert(verify.end(), fx.open_images.begin(), fx.open_images.end());
  std::vector<GridFunction> basis;
  for (const auto& name : s.function_names()) basis.push_back(s.function(name));
  if (basis.empty()) basis.push_back(GridFunction::pyramid(g));

  std::vector<StarMember> named;
  for (const auto& name : s.measure_names()) {
    const auto m = s.measure(name);
    if (m.grid() == g && simple_on(m, fx)) named.push_back({name, m});
  }
  const auto build_sample = [&](std::vector<StarMember> first) {
    std::set<std::string> labels;
    std::vector<StarMember> members;
    const auto push = [&](const StarMember& m) {
      if (labels.insert(m.label).second) members.push_back(m);
    };
    for (const auto& m : first) push(m);
    for (const auto& m : named) push(m);
    for (CellIndex c = 0; c < g.size(); ++c) {
      auto d = QuasiMeasure::dirac(g, c);
      push({d.label(), d});
    }
    return FiniteStarSample(std::move(members));
  };

  for (const auto& name : s.transform_names()) {
    const auto q = s.transform(name);
    if (!(q.source() == g)) continue;
    const auto own = s.star_sample(name);
    const auto map = s.preimage_map(name);
    const auto sigma = s.simple_source(name);
    std::vector<StarMember> first;
    if (own) first = own->members();
    if (sigma) first.push_back({sigma->label(), *sigma});
    const auto sample = own ? *own : map ? FiniteStarSample::diracs(g) : build_sample(first);
    add(out, suite, name, [&] {
      try {
        auto f = factorize(q, sample, match, verify);
        Report r = f.residual;
        // Expected labeling for the constructors with a known answer.
        std::vector<std::string> expected;
        if (own) {
          for (const auto& m : own->members()) expected.push_back(m.label);
        } else if (sigma) {
          expected.assign(q.target().size(), sigma->label());
        } else if (map) {
          for (CellIndex y = 0; y < q.target().size(); ++y) expected.push_back(QuasiMeasure::dirac(g, (*map)(y)).label());
        }
        json w = json::object();
        const auto labels = q.target_labels();
        for (std::size_t y = 0; y < f.w.size(); ++y) w[labels[y]] = f.w[y];
        r.values["w"] = w;
        if (!expected.empty() && expected != f.w) {
          r.status = Status::Fail;
          r.witness = json{{"expected", expected}, {"found", f.w}};
        }
        return r;
      } catch (const UncoveredPoint& e) {
        Report r{"factorization", "q = w^{-1} o [*] on the sample"};
        r.status = Status::Inconclusive;
        r.values = {{"uncovered_point", q.target_labels()[e.cell()]}, {"reason", e.what()}};
        return r;
      }
    });
    add(out, suite, name, [&] {
      Functional r;
      if (map) {
        const CellMap f = *map;
        r = [f](const GridFunction& a) {
          std::vector<double> v(f.from().size());
          for (CellIndex y = 0; y < v.size(); ++y) v[y] = a[f(y)];
          return GridFunction(f.from(), std::move(v), a.name());
        };
      } else if (sigma) {
        const QuasiMeasure m = *sigma;
        const Grid target = q.target();
        r = [m, target](const GridFunction& a) { return GridFunction::constant(target, simple_value(m, a)); };
      } else {
        r = [q](const GridFunction& a) { return induced_function(q, a); };
      }
      return reconstruct_from_homomorphism(q.source(), q.target(), r, basis).report;
    });
  }
  add(out, suite, "zero_functional", [&] {
    Report r{"reconstruction_rejects", "a functional with r(1) != 1 is not a quasi-homomorphism"};
    const Functional zero = [&g](const GridFunction&) { return GridFunction::constant(g, 0.0); };
    try {
      reconstruct_from_homomorphism(g, g, zero, basis);
      r.status = Status::Fail;
      r.values = {{"rejected", false}};
      r.witness = r.values;
    } catch (const NotAQuasiHomomorphism& e) {
      r.values = {{"rejected", true}, {"reason", e.what()}};
    }
    return r;
  });
}

using SuiteFn = void (*)(const Scene&, const Fixtures&, const SuiteOptions&, std::vector<Report>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{{"measure-axioms", measure_axioms},
                                                              {"integral-props", integral_props},
                                                              {"transform-axioms", transform_axioms},
                                                              {"riesz", riesz},
                                                              {"factorization", factorization}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<Report> run_suite(const Scene& scene, const std::string& suite, const SuiteOptions& options) {
  std::vector<SuiteFn> selected;
  for (const auto& [name, fn] : registry())
    if (suite == "all" || suite == name) selected.push_back(fn);
  if (selected.empty()) throw ParseError("unknown suite '" + suite + "'");
  const Fixtures fx(scene);
  std::vector<Report> out;
  for (const auto fn : selected) fn(scene, fx, options, out);
  return out;
}

}  // namespace qmlab::cli
