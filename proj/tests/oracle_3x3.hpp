#pragma once

// A brute-force model of the 3x3 grid on 9-bit masks. It shares no code with
// the library's evaluator and serves as an independent oracle.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmlab/geometry.hpp"
#include "qmlab/measure.hpp"
#include "qmlab/topology.hpp"

namespace qmlab::testing {

using Mask = std::uint32_t;
constexpr Mask kFull = 0x1FF;
constexpr Mask kBorder = kFull & ~(Mask{1} << 4);
constexpr int kCenter = 4;

inline Mask bit(int r, int c) { return Mask{1} << (3 * r + c); }

inline Mask neighbors(int cell, bool eight) {
  const int r = cell / 3;
  const int c = cell % 3;
  Mask out = 0;
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      if (!eight && dr != 0 && dc != 0) continue;
      const int rr = r + dr;
      const int cc = c + dc;
      if (rr >= 0 && rr < 3 && cc >= 0 && cc < 3) out |= bit(rr, cc);
    }
  return out;
}

inline std::vector<Mask> components(Mask s, bool eight) {
  std::vector<Mask> out;
  while (s != 0) {
    Mask comp = s & (~s + 1);
    for (;;) {
      Mask grown = comp;
      for (int i = 0; i < 9; ++i)
        if ((comp >> i) & 1U) grown |= neighbors(i, eight) & s;
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    s &= ~comp;
  }
  return out;
}

// The extension chain: a 0-1 rule on closed solid sets, extended to open
// solid sets by complement, to closed connected sets by subtracting their
// holes, and to closed sets by summing over components.
struct Oracle {
  std::function<bool(Mask)> rule;  // on closed solid sets
  bool closed_eight = true;

  int closed(Mask k) const {
    int total = 0;
    for (Mask comp : components(k, closed_eight)) {
      int v = 1;
      for (Mask hole : components(kFull & ~comp, !closed_eight)) v -= 1 - (rule(kFull & ~hole) ? 1 : 0);
      total += v;
    }
    return total;
  }
  int open(Mask u) const { return 1 - closed(kFull & ~u); }
  int eval(Mask s, Kind kind) const { return kind == Kind::Closed ? closed(s) : open(s); }
};

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline Oracle aarnes_oracle(bool eight) {
  return {[](Mask s) {
            return (s & kBorder) == kBorder || ((s & kBorder) != 0 && ((s >> kCenter) & 1U) != 0);
          },
          eight};
}

inline Oracle three_point_oracle(Mask marked, bool eight) {
  return {[marked](Mask s) { return popcount(s & marked) >= 2; }, eight};
}

inline Oracle dirac_oracle(int cell, bool eight) {
  return {[cell](Mask s) { return ((s >> cell) & 1U) != 0; }, eight};
}

inline Image image_of(const Grid& g, Mask m, Kind kind) {
  Image a = Image::empty(g, kind);
  for (int i = 0; i < 9; ++i)
    if ((m >> i) & 1U) a.cells.insert(static_cast<CellIndex>(i));
  return a;
}

inline Mask mask_of(const CellSet& s) {
  Mask m = 0;
  s.for_each([&](CellIndex c) { m |= Mask{1} << c; });
  return m;
}

struct Case {
  std::string name;
  QuasiMeasure measure;
  Oracle oracle;
};

inline std::vector<Case> cases(const Grid& g) {
  const bool eight = g.connectivity() == Connectivity::Closed8Open4;
  const auto geo = DistinguishedGeometry::of(g);
  Mask marked = 0;
  for (auto c : geo.marked) marked |= Mask{1} << c;
  std::vector<Case> out{{"aarnes", QuasiMeasure::aarnes(g, geo), aarnes_oracle(eight)},
                        {"three_point", QuasiMeasure::three_point(g, geo), three_point_oracle(marked, eight)}};
  for (int x = 0; x < 9; ++x)
    out.push_back({"dirac" + std::to_string(x), QuasiMeasure::dirac(g, static_cast<CellIndex>(x)), dirac_oracle(x, eight)});
  return out;
}

}  // namespace qmlab::testing
