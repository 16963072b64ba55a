#pragma once

// Seeded generators for the property tests. Every property runs a fixed number
// of cases from a fixed seed, so a failure names a reproducible case index.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qmlab/grid.hpp"
#include "qmlab/grid_function.hpp"

namespace qmlab::testing {

inline constexpr std::uint64_t kSeed = 20260916;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::uint64_t word() { return rng_(); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

  // Independent cells with density p.
  CellSet cells(const Grid& g, double p) {
    CellSet s = g.none();
    for (CellIndex c = 0; c < g.size(); ++c)
      if (coin(p)) s.insert(c);
    return s;
  }

  Image image(const Grid& g) {
    return {cells(g, real(0.1, 0.9)), coin() ? Kind::Open : Kind::Closed};
  }

  // Dyadic combination of smooth builtins, redrawn until its level sets are
  // well-composed (see is_well_composed).
  GridFunction smooth_function(const Grid& g) {
    const std::vector<GridFunction> basis{GridFunction::pyramid(g), GridFunction::plane_b(g),
                                          GridFunction::coords_x(g), GridFunction::coords_y(g)};
    for (;;) {
      GridFunction f = GridFunction::constant(g, integer(-4, 4) / 4.0);
      for (const auto& b : basis) f = f + (integer(-4, 4) / 4.0) * b;
      if (is_well_composed(f)) return f;
    }
  }

  // A smooth function floored to a power-of-two step wider than any jump
  // between 8-adjacent cells, so neighbors differ by at most one level and
  // every level set is sampled (see resolves_levels). Redrawn until
  // well-composed.
  GridFunction continuous_function(const Grid& g) {
    for (;;) {
      const GridFunction f = smooth_function(g);
      double jump = 0.0;
      for (CellIndex c = 0; c < g.size(); ++c)
        g.for_each_neighbor(c, Adjacency::Eight, [&](CellIndex nb) { jump = std::max(jump, std::abs(f[c] - f[nb])); });
      if (jump == 0.0) return f;
      double step = 1.0;
      while (step <= jump) step *= 2;
      while (step / 2 > jump) step /= 2;
      GridFunction q = f.map([step](double t) { return std::floor(t / step) * step; }, "floor(" + f.name() + ")");
      if (is_well_composed(q) && resolves_levels(q)) return q;
    }
  }

  // Arbitrary values on a small lattice; not continuous in any sense.
  GridFunction lattice_function(const Grid& g, int levels, double step) {
    std::vector<double> v(g.size());
    for (auto& x : v) x = step * integer(-levels, levels);
    return GridFunction(g, std::move(v), "lattice");
  }

 private:
  std::mt19937_64 rng_;
};

inline std::string case_label(int i) { return "case " + std::to_string(i) + " (seed " + std::to_string(kSeed) + ")"; }

}  // namespace qmlab::testing
