#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "qmlab/errors.hpp"
#include "qmlab/geometry.hpp"
#include "qmlab/integral.hpp"
#include "qmlab/integral_checks.hpp"
#include "qmlab/shapes.hpp"
#include "qmlab/staircase.hpp"
#include "support.hpp"

using namespace qmlab;
using qmlab::testing::case_label;
using qmlab::testing::Gen;

namespace {

struct Fixture {
  explicit Fixture(int n)
      : g(Grid::square(n)),
        geo(DistinguishedGeometry::of(g)),
        aarnes(QuasiMeasure::aarnes(g, geo)),
        three(QuasiMeasure::three_point(g, geo)),
        center(QuasiMeasure::dirac(g, geo.center)) {}
  Grid g;
  DistinguishedGeometry geo;
  QuasiMeasure aarnes;
  QuasiMeasure three;
  QuasiMeasure center;

  std::vector<QuasiMeasure> simple() const { return {aarnes, three, center}; }
};

// Independent clamp of the i-th step [lo, hi]: min(max(x - lo, 0), hi - lo).
double clamp_step(double x, double lo, double hi) { return std::min(std::max(x - lo, 0.0), hi - lo); }

GridFunction three_by_three(const std::vector<double>& v) { return GridFunction(Grid::square(3), v, "lattice"); }

}  // namespace

TEST(Integral, SublevelAndIntervalPreimage) {
  Fixture f(65);
  const auto pyramid = GridFunction::pyramid(f.g);
  const Image zero = sublevel(pyramid, 0.0);
  EXPECT_EQ(zero.kind, Kind::Closed);
  EXPECT_TRUE(zero.cells == f.geo.border);
  EXPECT_TRUE(sublevel(pyramid, pyramid.max()).cells.is_full());
  EXPECT_TRUE(sublevel(pyramid, INFINITY).cells.is_full());
  EXPECT_TRUE(sublevel(pyramid, -0.01).cells.empty());
  const Image open = interval_preimage(pyramid, 0.0, INFINITY);
  EXPECT_EQ(open.kind, Kind::Open);
  EXPECT_TRUE(open.cells == f.geo.border.complement());
  const Image band = interval_preimage(pyramid, 0.25, 0.5);
  for (CellIndex c = 0; c < f.g.size(); ++c) EXPECT_EQ(band.cells.contains(c), pyramid[c] > 0.25 && pyramid[c] < 0.5);
}

TEST(Integral, NonlinearIntegralOfTheAarnesSquare) {
  Fixture f(65);
  const auto a = GridFunction::pyramid(f.g);
  const auto b = GridFunction::plane_b(f.g);
  EXPECT_EQ(integrate(f.aarnes, a), 0.0);
  EXPECT_EQ(integrate(f.aarnes, b), 0.0);
  EXPECT_EQ(integrate(f.aarnes, a + b), 1.0);
  EXPECT_EQ(simple_value(f.aarnes, a), 0.0);
  EXPECT_EQ(simple_value(f.aarnes, a + b), 1.0);
  const auto d = pushforward_distribution(f.aarnes, a);
  ASSERT_EQ(d.jumps.size(), 1U);
  EXPECT_EQ(d.jumps[0].t, 0.0);
  EXPECT_EQ(d.jumps[0].mass, 1.0);
}

TEST(Integral, ConstantsIntegrateToThemselves) {
  Fixture f(17);
  const auto mix = QuasiMeasure::mixture({0.5, 0.25, 0.25}, {f.aarnes, f.three, f.center});
  for (const auto& m : {f.aarnes, f.three, f.center, mix})
    for (double c : {-2.0, 0.0, 0.5, 3.25}) EXPECT_EQ(integrate(m, GridFunction::constant(f.g, c)), c);
}

TEST(Integral, DiracAndMixtureDistributions) {
  Fixture f(17);
  const auto x = GridFunction::coords_x(f.g);
  const CellIndex p = f.geo.marked[0];
  const CellIndex r = f.geo.marked[2];
  ASSERT_NE(x[p], x[r]);
  const auto dp = pushforward_distribution(QuasiMeasure::dirac(f.g, p), x);
  ASSERT_EQ(dp.jumps.size(), 1U);
  EXPECT_EQ(dp.jumps[0].t, x[p]);
  const auto half = QuasiMeasure::mixture({0.5, 0.5}, {QuasiMeasure::dirac(f.g, p), QuasiMeasure::dirac(f.g, r)});
  const auto d = pushforward_distribution(half, x);
  ASSERT_EQ(d.jumps.size(), 2U);
  EXPECT_EQ(d.jumps[0].mass, 0.5);
  EXPECT_EQ(d.jumps[1].mass, 0.5);
  EXPECT_EQ(d.jumps[0].t, std::min(x[p], x[r]));
  EXPECT_EQ(d.jumps[1].t, std::max(x[p], x[r]));
  EXPECT_EQ(d.cdf(d.jumps[0].t), 0.5);
  EXPECT_EQ(d.cdf(d.jumps[0].t - 1e-9), 0.0);
  EXPECT_EQ(d.mean(), (x[p] + x[r]) / 2);
}

TEST(Integral, SimpleValueOfADiracIsTheSample) {
  Fixture f(17);
  Gen gen;
  for (int i = 0; i < 20; ++i) {
    const auto a = gen.lattice_function(f.g, 5, 0.5);
    const auto cell = static_cast<CellIndex>(gen.integer(0, static_cast<int>(f.g.size()) - 1));
    EXPECT_EQ(simple_value(QuasiMeasure::dirac(f.g, cell), a), a[cell]) << case_label(i);
  }
}

TEST(Integral, SimpleValueRejectsANonSimpleMeasure) {
  Fixture f(17);
  // The two point masses sit on different columns, so F(1/2) = 1/2.
  const auto half = QuasiMeasure::mixture(
      {0.5, 0.5}, {QuasiMeasure::dirac(f.g, f.geo.marked[0]), QuasiMeasure::dirac(f.g, f.geo.marked[2])});
  EXPECT_THROW(simple_value(half, GridFunction::coords_x(f.g)), InvariantViolation);
}

TEST(Integral, Spectrum) {
  EXPECT_EQ(spectrum(GridFunction::constant(Grid::square(9), 0.75)), std::vector<double>{0.75});
  EXPECT_EQ(spectrum(GridFunction::pyramid(Grid::square(5))), (std::vector<double>{0.0, 0.5, 1.0}));
  const Grid g = Grid::square(9);
  const auto ind = GridFunction::indicator(g, shapes::border_ring(g));
  EXPECT_EQ(spectrum(ind), (std::vector<double>{0.0, 1.0}));
}

TEST(Integral, DistributionMassesSumToOneAndBoundTheIntegral) {
  Fixture f(33);
  Gen gen;
  const auto mix = QuasiMeasure::mixture({0.5, 0.25, 0.25}, {f.aarnes, f.three, f.center});
  for (int i = 0; i < 40; ++i) {
    const auto a = i % 2 == 0 ? gen.smooth_function(f.g) : gen.continuous_function(f.g);
    for (const auto& m : {f.aarnes, f.three, f.center, mix}) {
      const auto d = pushforward_distribution(m, a);
      double total = 0.0;
      for (std::size_t k = 0; k < d.jumps.size(); ++k) {
        EXPECT_GT(d.jumps[k].mass, 0.0);
        if (k > 0) {
          EXPECT_LT(d.jumps[k - 1].t, d.jumps[k].t);
        }
        total += d.jumps[k].mass;
      }
      EXPECT_NEAR(total, 1.0, 1e-12) << case_label(i);
      const double v = integrate(m, a);
      EXPECT_GE(v, a.min() - 1e-12) << case_label(i);
      EXPECT_LE(v, a.max() + 1e-12) << case_label(i);
    }
  }
}

TEST(Integral, ResolvesLevels) {
  EXPECT_TRUE(resolves_levels(GridFunction::pyramid(Grid::square(9))));
  EXPECT_TRUE(resolves_levels(GridFunction::constant(Grid::square(9), 2.0)));
  // Levels are ranks in the spectrum: -1 next to 1 is fine until 0 occurs.
  std::vector<double> v(9, -1.0);
  v[4] = 1.0;
  EXPECT_TRUE(resolves_levels(three_by_three(v)));
  v[0] = 0.0;
  EXPECT_FALSE(resolves_levels(three_by_three(v)));
  EXPECT_TRUE(resolves_levels(GridFunction(Grid::discrete(3), {0.0, 5.0, -5.0})));
  Gen gen;
  for (int i = 0; i < 20; ++i) {
    const auto a = gen.continuous_function(Grid::square(33));
    EXPECT_TRUE(resolves_levels(a) && is_well_composed(a)) << case_label(i);
    EXPECT_GT(a.distinct_values().size(), 4U) << case_label(i);
  }
}

TEST(Integral, ChangeOfVariablesAndQuasiLinearity) {
  Fixture f(33);
  Gen gen;
  const auto maps = standard_value_maps();
  const auto mix = QuasiMeasure::mixture({0.5, 0.25, 0.25}, {f.aarnes, f.three, f.center});
  for (int i = 0; i < 15; ++i) {
    const auto a = gen.continuous_function(f.g);
    for (const auto& m : {f.aarnes, f.three, f.center, mix}) {
      for (const auto& phi : maps) {
        EXPECT_TRUE(change_of_variables_check(m, a, phi).passed()) << case_label(i) << " " << phi.name;
        const auto& psi = gen.pick(maps);
        EXPECT_TRUE(quasi_linearity_check(m, a, phi, psi).passed()) << case_label(i) << " " << phi.name << " " << psi.name;
      }
    }
  }
}

// Monotone maps carry sublevel sets to sublevel sets (or, decreasing, to
// complements of open sublevel sets), so change of variables holds on the grid
// for every function, level-resolving or not.
TEST(Integral, ChangeOfVariablesForMonotoneMapsOnAnySmoothFunction) {
  Fixture f(33);
  Gen gen;
  std::vector<ValueMap> monotone;
  for (const auto& m : standard_value_maps())
    if (m.name == "t" || m.name == "2t" || m.name == "3t" || m.name == "-t" || m.name == "1" || m.name == "exp")
      monotone.push_back(m);
  ASSERT_EQ(monotone.size(), 6U);
  std::size_t unresolved = 0;
  for (int i = 0; i < 30; ++i) {
    const auto a = gen.smooth_function(f.g);
    if (!resolves_levels(a)) ++unresolved;
    for (const auto& m : {f.aarnes, f.three, f.center})
      for (const auto& phi : monotone)
        EXPECT_TRUE(change_of_variables_check(m, a, phi).passed()) << case_label(i) << " " << phi.name;
  }
  EXPECT_GT(unresolved, 20U);
}

// The same identity for t² fails on a sampled smooth function whose zero set
// falls between cells: μ_a = δ_0 but μ(a²) is the smallest positive square.
TEST(Integral, UnsampledZeroSetBreaksChangeOfVariables) {
  const Grid g = Grid::square(17);
  const auto aarnes = QuasiMeasure::aarnes(g, DistinguishedGeometry::of(g));
  const auto a = 0.75 * GridFunction::pyramid(g) + 0.75 * GridFunction::plane_b(g) + -1.0 * GridFunction::coords_y(g);
  ASSERT_FALSE(resolves_levels(a));
  const auto d = pushforward_distribution(aarnes, a);
  ASSERT_EQ(d.jumps.size(), 1U);
  EXPECT_EQ(d.jumps[0].t, 0.0);
  EXPECT_EQ(integrate(aarnes, a.map([](double t) { return t * t; })), 1.0 / 1024);
  const ValueMap square{"t^2", [](double t) { return t * t; }};
  EXPECT_FALSE(change_of_variables_check(aarnes, a, square).passed());
}

TEST(Integral, QuasiLinearityExamples) {
  Fixture f(65);
  const auto a = GridFunction::pyramid(f.g);
  const ValueMap t{"t", [](double v) { return v; }};
  const ValueMap minus{"-t", [](double v) { return -v; }};
  const ValueMap square{"t^2", [](double v) { return v * v; }};
  EXPECT_TRUE(quasi_linearity_check(f.aarnes, a, t, minus).passed());
  EXPECT_EQ(integrate(f.aarnes, a.map(square.f)), 0.0);
  EXPECT_TRUE(change_of_variables_check(f.aarnes, a, square).passed());
  const auto sum = a + GridFunction::plane_b(f.g);
  const double v = simple_value(f.three, sum);
  EXPECT_EQ(integrate(f.three, 2.0 * sum + 3.0 * sum), 5.0 * v);
}

TEST(Integral, SimpleMultiplicativityOnContinuousFunctions) {
  Fixture f(33);
  Gen gen;
  const auto maps = standard_value_maps();
  for (int i = 0; i < 20; ++i) {
    const auto a = gen.continuous_function(f.g);
    for (const auto& sigma : f.simple()) {
      const auto& phi = gen.pick(maps);
      const auto& psi = gen.pick(maps);
      const auto rep = multiplicativity_check(sigma, a, phi, psi);
      EXPECT_TRUE(rep.passed()) << case_label(i) << " " << rep.to_json().dump();
      EXPECT_EQ(integrate(sigma, a), simple_value(sigma, a)) << case_label(i);
    }
  }
}

// A well-composed lattice function whose adjacent cells skip a spectrum value
// breaks multiplicativity of the Aarnes measure on the grid: the sublevel sets
// of a and of a² are not nested the way a continuous function's would be.
TEST(Integral, LevelSkippingFunctionBreaksGridMultiplicativity) {
  std::vector<double> v(9, -1.0);
  v[4] = 0.0;  // center
  v[1] = 1.0;  // top middle, next to -1 cells
  const auto a = three_by_three(v);
  ASSERT_TRUE(is_well_composed(a));
  ASSERT_FALSE(resolves_levels(a));
  const Grid& g = a.grid();
  const auto aarnes = QuasiMeasure::aarnes(g, DistinguishedGeometry::of(g));
  EXPECT_EQ(integrate(aarnes, a), 0.0);
  EXPECT_EQ(integrate(aarnes, a * a), 1.0);
  const ValueMap t{"t", [](double x) { return x; }};
  EXPECT_FALSE(multiplicativity_check(aarnes, a, t, t).passed());
}

// Exhaustively over {-1, 0, 1}^9: every well-composed function that resolves
// its levels is multiplicative for both simple constructions, and Dirac
// measures are multiplicative on every function.
TEST(Integral, LevelResolvingFunctionsAreMultiplicativeExhaustive3x3) {
  const Grid g = Grid::square(3);
  const auto geo = DistinguishedGeometry::of(g);
  const std::vector<QuasiMeasure> rules{QuasiMeasure::aarnes(g, geo), QuasiMeasure::three_point(g, geo)};
  const auto maps = standard_value_maps();
  std::size_t checked = 0;
  for (int code = 0; code < 19683; ++code) {
    std::vector<double> v(9);
    int rest = code;
    for (auto& x : v) {
      x = rest % 3 - 1;
      rest /= 3;
    }
    const auto a = three_by_three(v);
    const int x = code % 9;
    const auto dirac = QuasiMeasure::dirac(g, static_cast<CellIndex>(x));
    const auto& phi = maps[static_cast<std::size_t>(code) % maps.size()];
    const auto& psi = maps[static_cast<std::size_t>(code / 9) % maps.size()];
    ASSERT_TRUE(multiplicativity_check(dirac, a, phi, psi).passed()) << "code " << code;
    if (!is_well_composed(a) || !resolves_levels(a)) continue;
    ++checked;
    for (const auto& sigma : rules)
      for (const auto& p : maps)
        for (const auto& q : maps)
          ASSERT_TRUE(multiplicativity_check(sigma, a, p, q).passed()) << "code " << code << " " << p.name << " " << q.name;
  }
  EXPECT_EQ(checked, 1269U);
}

TEST(Integral, FunctionalBoundsOnRandomPairs) {
  Fixture f(33);
  Gen gen;
  std::vector<std::pair<GridFunction, GridFunction>> pairs;
  for (int i = 0; i < 30; ++i) {
    const auto a = gen.smooth_function(f.g);
    const auto gap = gen.lattice_function(f.g, 2, 0.25).map([](double t) { return std::abs(t); });
    pairs.emplace_back(a, a + gap);
    pairs.emplace_back(a, gen.smooth_function(f.g));
  }
  const auto mix = QuasiMeasure::mixture({0.5, 0.25, 0.25}, {f.aarnes, f.three, f.center});
  for (const auto& m : {f.aarnes, f.three, f.center, mix}) {
    const auto rep = functional_bounds_check(m, pairs);
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
    EXPECT_GE(rep.values["ordered_pairs"].get<int>(), 30);
  }
}

TEST(Integral, DistributionOfAMonotoneImage) {
  Fixture f(33);
  Gen gen;
  const auto cube = [](double t) { return t * t * t + t; };
  for (int i = 0; i < 10; ++i) {
    const auto a = gen.smooth_function(f.g);
    for (const auto& m : {f.aarnes, f.three, QuasiMeasure::mixture({0.5, 0.5}, {f.aarnes, f.center})}) {
      const auto before = pushforward_distribution(m, a);
      const auto after = pushforward_distribution(m, a.map(cube));
      ASSERT_EQ(before.jumps.size(), after.jumps.size()) << case_label(i);
      for (std::size_t k = 0; k < before.jumps.size(); ++k) {
        EXPECT_EQ(after.jumps[k].t, cube(before.jumps[k].t));
        EXPECT_EQ(after.jumps[k].mass, before.jumps[k].mass);
      }
    }
  }
}

TEST(Integral, IncreasingChainConvergesToTheIntegral) {
  Fixture f(33);
  const auto a = GridFunction::pyramid(f.g) + GridFunction::plane_b(f.g);
  for (const auto& m : {f.aarnes, f.three, f.center}) {
    double previous = -INFINITY;
    double last = 0.0;
    for (int k = 0; k <= 8; ++k) {
      // min(a, level) rises to a as the level reaches max a
      const double level = a.min() + (a.max() - a.min()) * k / 8.0;
      const double v = integrate(m, a.map([level](double t) { return std::min(t, level); }));
      EXPECT_GE(v, previous);
      previous = v;
      last = v;
    }
    EXPECT_EQ(last, integrate(m, a));
  }
}

TEST(Staircase, ExplicitExampleByHand) {
  const Grid g = Grid::square(3);
  const auto zero = GridFunction::constant(g, 0.0);
  const auto d = staircase(zero, zero, 1.0, 1.0, 2);
  ASSERT_EQ(d.n, 2);
  EXPECT_EQ(d.beta, (std::vector<double>{0.0, 1.0, 2.0}));
  ASSERT_EQ(d.a_pieces.size(), 2U);
  for (CellIndex c = 0; c < g.size(); ++c) {
    EXPECT_EQ(d.a_pieces[0][c], 0.5);
    EXPECT_EQ(d.a_pieces[1][c], -0.5);
    EXPECT_EQ(d.b_pieces[0][c], 0.0);
    EXPECT_EQ(d.b_pieces[1][c], 0.0);
    EXPECT_EQ(d.a_shifted[0][c], 1.0);
    EXPECT_EQ(d.a_shifted[1][c], 0.0);
  }
  const auto r = staircase_residuals(zero, zero, d);
  EXPECT_EQ(r.sum_a, 0.0);
  EXPECT_EQ(r.sum_b, 0.0);
  EXPECT_EQ(r.product, 0.0);
  EXPECT_LE(r.order, 0.0);
}

TEST(Staircase, DefaultsKeepTheStepBelowDelta) {
  const Grid g = Grid::square(3);
  const auto zero = GridFunction::constant(g, 0.0);
  const auto d = staircase(zero, zero, 1.0);
  EXPECT_EQ(d.shift, 0.0);
  EXPECT_EQ(d.n, 2);
  const auto wide = staircase(zero, zero, 10.0);
  EXPECT_EQ(wide.n, 2);
  EXPECT_TRUE(staircase_check(zero, zero, 10.0).passed());
  const auto pyramid = GridFunction::pyramid(Grid::square(33));
  EXPECT_TRUE(staircase_check(pyramid, pyramid + 1.0, 0.1).passed());
}

TEST(Staircase, PreconditionsAreEnforced) {
  const Grid g = Grid::square(5);
  const auto a = GridFunction::pyramid(g);
  EXPECT_THROW(staircase(a + 1.0, a, 1.0), PreconditionViolation);
  EXPECT_THROW(staircase(a, a, 0.0), PreconditionViolation);
  EXPECT_THROW(staircase(a, a, -1.0), PreconditionViolation);
  // M too small to lift a to nonnegative values, and a step wider than δ.
  EXPECT_THROW(staircase(a + -1.0, a, 1.0, 0.5, 4), PreconditionViolation);
  EXPECT_THROW(staircase(a, a, 0.1, 0.0, 2), PreconditionViolation);
}

// The pieces match the clamp formulas recomputed here, for random a <= b.
TEST(Staircase, PiecesMatchTheClampFormulasOnRandomPairs) {
  const Grid g = Grid::square(33);
  Gen gen;
  for (int i = 0; i < 50; ++i) {
    const auto a = gen.coin() ? gen.smooth_function(g) : gen.lattice_function(g, 4, 0.5);
    const auto b = a + gen.lattice_function(g, 3, 0.25).map([](double t) { return std::abs(t); });
    for (double delta : {1.0, 0.1}) {
      const auto rep = staircase_check(a, b, delta);
      ASSERT_TRUE(rep.passed()) << case_label(i) << " " << rep.to_json().dump();
      const auto d = staircase(a, b, delta);
      EXPECT_EQ(d.shift, std::max(0.0, -a.min()));
      const double n = d.n;
      for (int k = 1; k <= d.n; ++k) {
        EXPECT_LT(d.beta[static_cast<std::size_t>(k)] - d.beta[static_cast<std::size_t>(k - 1)], delta);
        const double lo = d.beta[static_cast<std::size_t>(k - 1)];
        const double hi = d.beta[static_cast<std::size_t>(k)];
        for (CellIndex c = 0; c < g.size(); c += 37) {
          const auto idx = static_cast<std::size_t>(k - 1);
          EXPECT_NEAR(d.a_pieces[idx][c], clamp_step(a[c] + d.shift, lo, hi) - d.shift / n, 1e-12);
          EXPECT_NEAR(d.b_pieces[idx][c], clamp_step(b[c] + d.shift + delta, lo, hi) - (d.shift + delta) / n, 1e-12);
        }
      }
      // The explicit overload with a coarser M and the same step bound.
      const double shift = d.shift + 0.5;
      const double beta = b.max() + shift + delta;
      const int pieces = static_cast<int>(std::ceil(beta / delta));
      const auto e = staircase(a, b, delta, shift, pieces);
      const auto r = staircase_residuals(a, b, e);
      EXPECT_LE(r.sum_a, 1e-12) << case_label(i);
      EXPECT_LE(r.sum_b, 1e-12) << case_label(i);
      EXPECT_LE(r.order, 1e-12) << case_label(i);
      EXPECT_EQ(r.product, 0.0) << case_label(i);
    }
  }
}

TEST(Riesz, SubordinatesAndRoundTrip) {
  Fixture f(33);
  const Image whole = Image::whole(f.g, Kind::Open);
  const auto one = GridFunction::constant(f.g, 1.0);
  EXPECT_TRUE(is_subordinate(one, whole));
  EXPECT_EQ(integrate(f.aarnes, one), f.aarnes.eval(whole));

  const Image nbhd{shapes::band_and_bar(f.g, 3), Kind::Open};
  const auto ks = plateau_subordinates(f.g, nbhd);
  ASSERT_EQ(ks.size(), 3U);
  double best = 0.0;
  for (const auto& k : ks) {
    EXPECT_TRUE(is_subordinate(k, nbhd));
    best = std::max(best, integrate(f.aarnes, k));
  }
  EXPECT_EQ(f.aarnes.eval(nbhd), 1.0);
  EXPECT_EQ(best, 1.0);

  const Image small{shapes::disk(f.g, at_unit(f.g, 0.3, 0.7), 0.1), Kind::Open};
  EXPECT_EQ(f.aarnes.eval(small), 0.0);
  for (const auto& k : plateau_subordinates(f.g, small)) EXPECT_EQ(integrate(f.aarnes, k), 0.0);

  EXPECT_FALSE(is_subordinate(one, small));
  EXPECT_FALSE(is_subordinate(one, Image{small.cells, Kind::Closed}));

  const auto family = shapes::open_family(f.g, f.geo);
  ASSERT_EQ(family.size(), 10U);
  std::vector<std::vector<GridFunction>> subs;
  for (const auto& u : family) subs.push_back(plateau_subordinates(f.g, u.image));
  for (const auto& m : {f.aarnes, f.three, f.center}) {
    const auto rep = riesz_roundtrip_check(m, family, subs);
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
  }
}
