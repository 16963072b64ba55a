#include "qmlab/topology.hpp"

#include <deque>

namespace qmlab {

Labeling label_components(const Grid& g, const CellSet& s, Adjacency adj) {
  Labeling out;
  out.label.assign(g.size(), -1);
  std::vector<CellIndex> stack;
  s.for_each([&](CellIndex seed) {
    if (out.label[seed] >= 0) return;
    const int id = out.count++;
    out.label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      g.for_each_neighbor(c, adj, [&](CellIndex nb) {
        if (out.label[nb] < 0 && s.contains(nb)) {
          out.label[nb] = id;
          stack.push_back(nb);
        }
      });
    }
  });
  return out;
}

std::vector<CellSet> connected_components(const Grid& g, const CellSet& s, Adjacency adj) {
  const auto lab = label_components(g, s, adj);
  std::vector<CellSet> out(static_cast<std::size_t>(lab.count), CellSet(g.size()));
  for (CellIndex c = 0; c < g.size(); ++c)
    if (lab.label[c] >= 0) out[static_cast<std::size_t>(lab.label[c])].insert(c);
  return out;
}

bool is_connected(const Grid& g, const CellSet& s, Adjacency adj) {
  return label_components(g, s, adj).count <= 1;
}

bool is_solid(const Grid& g, const Image& a) {
  return is_connected(g, a.cells, g.adjacency(a.kind)) &&
         is_connected(g, a.cells.complement(), g.adjacency(opposite(a.kind)));
}

std::vector<int> erosion_depth(const Grid& g, const CellSet& s, EdgeMode mode) {
  // Multi-source BFS from the complement (and, optionally, the grid edge).
  const auto adj = g.region_adjacency();
  constexpr int kUnset = -2;
  std::vector<int> dist(g.size(), kUnset);
  std::deque<CellIndex> queue;
  for (CellIndex c = 0; c < g.size(); ++c) {
    if (!s.contains(c)) {
      dist[c] = -1;
      queue.push_back(c);
    }
  }
  if (mode == EdgeMode::OutsideIsComplement && !g.is_discrete()) {
    for (CellIndex c = 0; c < g.size(); ++c) {
      const auto [r, col] = g.position(c);
      const bool edge = r == 0 || col == 0 || r == g.rows() - 1 || col == g.cols() - 1;
      if (edge && s.contains(c)) {
        dist[c] = 0;
        queue.push_back(c);
      }
    }
  }
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    g.for_each_neighbor(c, adj, [&](CellIndex nb) {
      if (dist[nb] == kUnset) {
        dist[nb] = dist[c] + 1;
        queue.push_back(nb);
      }
    });
  }
  // Cells never reached are infinitely deep (no complement in their component
  // of the adjacency graph); report a depth larger than any grid distance.
  const int deep = static_cast<int>(g.size());
  for (auto& d : dist)
    if (d == kUnset) d = deep;
  return dist;
}

CellSet erode(const Grid& g, const CellSet& s, int steps, EdgeMode mode) {
  if (steps <= 0) return s;
  const auto depth = erosion_depth(g, s, mode);
  CellSet out(g.size());
  for (CellIndex c = 0; c < g.size(); ++c)
    if (depth[c] >= steps) out.insert(c);
  return out;
}

bool is_clopen(const Grid& g, const CellSet& s) {
  return g.is_discrete() || s.empty() || s.is_full();
}

bool same_set(const Grid& g, const Image& a, const Image& b) {
  if (a.cells != b.cells) return false;
  return a.kind == b.kind || is_clopen(g, a.cells);
}

// Point-set reading of the two conventions.
//
// Closed8Open4: a closed image is the union of the closed unit squares of its
// cells; an open image is the interior of that union.
//
// Closed4Open8: each cell is a square with its corners cut off, and every
// lattice corner is a small diamond. A closed image is the union of its closed
// cut squares together with the diamonds whose surrounding cells all belong to
// it; an open image is the complement of the closed image of the complementary
// cells, i.e. the open cut squares, the edges between its cells, and every
// diamond touching at least one of its cells. Diamonds are what make open
// images 8-connected and closed images only 4-connected.
//
// Cells off the grid are ignored when deciding which cells surround a corner.

namespace {

bool neighbors_within(const Grid& g, const CellSet& s, const CellSet& t, Adjacency adj) {
  bool ok = true;
  s.for_each([&](CellIndex c) {
    if (!ok) return;
    g.for_each_neighbor(c, adj, [&](CellIndex nb) {
      if (!t.contains(nb)) ok = false;
    });
  });
  return ok;
}

bool adjacent_sets(const Grid& g, const CellSet& s, const CellSet& t, Adjacency adj) {
  bool hit = false;
  s.for_each([&](CellIndex c) {
    if (hit) return;
    g.for_each_neighbor(c, adj, [&](CellIndex nb) {
      if (t.contains(nb)) hit = true;
    });
  });
  return hit;
}

bool eight_connected_regions(const Grid& g) { return g.region_adjacency() == Adjacency::Eight; }

// Closed4Open8 only: every corner diamond touching a cell of `closed_part`
// lies in the union with `open_part`, i.e. all its cells are in closed_part or
// one of them is in open_part.
bool corners_covered(const Grid& g, const CellSet& closed_part, const CellSet& open_part) {
  bool ok = true;
  closed_part.for_each([&](CellIndex c) {
    if (!ok) return;
    const auto [r, col] = g.position(c);
    for (int dr : {-1, 0}) {
      for (int dc : {-1, 0}) {
        bool all_closed = true;
        bool any_open = false;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            const int rr = r + dr + i;
            const int cc = col + dc + j;
            if (!g.in_bounds(rr, cc)) continue;
            const auto x = g.index(rr, cc);
            all_closed = all_closed && closed_part.contains(x);
            any_open = any_open || open_part.contains(x);
          }
        }
        if (!all_closed && !any_open) ok = false;
      }
    }
  });
  return ok;
}

}  // namespace

bool contains(const Grid& g, const Image& outer, const Image& inner) {
  if (!inner.cells.is_subset_of(outer.cells)) return false;
  if (inner.cells.empty() || is_clopen(g, outer.cells)) return true;
  if (inner.is_closed() && outer.is_open())
    return neighbors_within(g, inner.cells, outer.cells, g.region_adjacency());
  if (inner.is_open() && outer.is_closed() && !eight_connected_regions(g))
    return neighbors_within(g, inner.cells, outer.cells, Adjacency::Eight);
  return true;
}

bool disjoint(const Grid& g, const Image& a, const Image& b) {
  if (a.cells.intersects(b.cells)) return false;
  if (g.is_discrete()) return true;
  if (a.is_closed() && b.is_closed()) return !adjacent_sets(g, a.cells, b.cells, g.region_adjacency());
  if (a.is_open() && b.is_open() && !eight_connected_regions(g))
    return !adjacent_sets(g, a.cells, b.cells, Adjacency::Eight);
  return true;
}

std::optional<Image> disjoint_union(const Grid& g, const Image& a, const Image& b, Kind kind) {
  if (!disjoint(g, a, b)) return std::nullopt;
  const CellSet u = a.cells | b.cells;
  if (g.is_discrete()) return Image{u, kind};
  // Whether a ∪ b is the image of u of kind k.
  const auto union_is = [&](Kind k) {
    if (a.cells.empty()) return b.kind == k;
    if (b.cells.empty()) return a.kind == k;
    if (a.kind == b.kind) {
      if (a.kind != k) return false;
      return k == Kind::Closed || !adjacent_sets(g, a.cells, b.cells, g.complement_adjacency());
    }
    const CellSet& open_part = a.is_open() ? a.cells : b.cells;
    const CellSet& closed_part = a.is_open() ? b.cells : a.cells;
    if (k == Kind::Closed) return neighbors_within(g, open_part, u, Adjacency::Eight);
    if (eight_connected_regions(g)) return neighbors_within(g, closed_part, u, Adjacency::Eight);
    return neighbors_within(g, closed_part, u, Adjacency::Four) && corners_covered(g, closed_part, open_part);
  };
  // The empty set and the whole space are both open and closed.
  if (union_is(kind) || (is_clopen(g, u) && union_is(opposite(kind)))) return Image{u, kind};
  return std::nullopt;
}

std::optional<Image> open_union(const Grid& g, const Image& u, const Image& v) {
  if (!u.is_open() || !v.is_open()) return std::nullopt;
  const CellSet s = u.cells | v.cells;
  if (g.is_discrete()) return Image{s, Kind::Open};
  const auto within_one = [&](std::initializer_list<CellIndex> cells) {
    bool in_u = true;
    bool in_v = true;
    for (auto c : cells) {
      in_u = in_u && u.cells.contains(c);
      in_v = in_v && v.cells.contains(c);
    }
    return in_u || in_v;
  };
  bool ok = true;
  s.for_each([&](CellIndex c) {
    if (!ok) return;
    // the edge between two cells is covered only if both lie in u or both in v
    g.for_each_neighbor(c, Adjacency::Four, [&](CellIndex nb) {
      if (s.contains(nb) && !within_one({c, nb})) ok = false;
    });
    if (eight_connected_regions(g)) {
      // interior corner points need the whole 2x2 block inside one of them
      const auto [r, col] = g.position(c);
      if (r + 1 < g.rows() && col + 1 < g.cols()) {
        const auto b = g.index(r, col + 1);
        const auto d = g.index(r + 1, col);
        const auto e = g.index(r + 1, col + 1);
        if (s.contains(b) && s.contains(d) && s.contains(e) && !within_one({c, b, d, e})) ok = false;
      }
    }
  });
  if (!ok) return std::nullopt;
  return Image{s, Kind::Open};
}

}  // namespace qmlab
