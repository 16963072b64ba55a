#include "qmlab/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qmlab/errors.hpp"
#include "qmlab/topology.hpp"

namespace qmlab::shapes {

namespace {

constexpr double kSlack = 1e-12;

template <class Pred>
CellSet select(const Grid& g, Pred&& pred) {
  CellSet s = g.none();
  for (CellIndex c = 0; c < g.size(); ++c)
    if (pred(c)) s.insert(c);
  return s;
}

int ring_depth(const Grid& g, CellIndex c) {
  const auto [r, col] = g.position(c);
  return std::min({r, col, g.rows() - 1 - r, g.cols() - 1 - col});
}

double distance_to_segment(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 == 0.0 ? 0.0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

std::vector<double> parse_numbers(std::string_view args, std::size_t expected, std::string_view name) {
  std::vector<double> out;
  std::string token;
  std::istringstream in{std::string(args)};
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw ParseError("template '" + std::string(name) + "': bad number '" + token + "'");
    }
  }
  if (out.size() != expected)
    throw ParseError("template '" + std::string(name) + "' expects " + std::to_string(expected) + " numbers");
  return out;
}

std::size_t marked_slot(std::string_view label) {
  if (label == "p") return 0;
  if (label == "q") return 1;
  if (label == "r") return 2;
  throw ParseError("unknown marked point '" + std::string(label) + "'");
}

int default_width(const Grid& g) { return std::max(1, (g.rows() - 1) / 16); }

}  // namespace

CellSet border_ring(const Grid& g) { return band(g, 1); }

CellSet band(const Grid& g, int width) {
  return select(g, [&](CellIndex c) { return ring_depth(g, c) < width; });
}

CellSet half_ring(const Grid& g, bool left) {
  const int h = g.cols() / 2;
  return select(g, [&](CellIndex c) {
    if (ring_depth(g, c) != 0) return false;
    return left ? g.position(c).col < h : g.position(c).col >= h;
  });
}

CellSet disk(const Grid& g, Point center, double radius) {
  return select(g, [&](CellIndex c) {
    const auto p = g.unit_point(c);
    return std::hypot(p.x - center.x, p.y - center.y) <= radius + kSlack;
  });
}

CellSet annulus(const Grid& g, Point center, double inner, double outer) {
  return select(g, [&](CellIndex c) {
    const auto p = g.unit_point(c);
    const double d = std::hypot(p.x - center.x, p.y - center.y);
    return d >= inner - kSlack && d <= outer + kSlack;
  });
}

CellSet rect(const Grid& g, Point lo, Point hi) {
  return select(g, [&](CellIndex c) {
    const auto p = g.unit_point(c);
    return p.x >= lo.x - kSlack && p.x <= hi.x + kSlack && p.y >= lo.y - kSlack && p.y <= hi.y + kSlack;
  });
}

CellSet stadium(const Grid& g, Point a, Point b, double radius) {
  return select(g, [&](CellIndex c) { return distance_to_segment(g.unit_point(c), a, b) <= radius + kSlack; });
}

CellSet strip(const Grid& g, int half_width) {
  const int h = g.cols() / 2;
  return select(g, [&](CellIndex c) {
    const auto [r, col] = g.position(c);
    return std::abs(col - h) <= half_width && r >= g.rows() / 2;
  });
}

CellSet band_and_bar(const Grid& g, int width) {
  const int h = g.cols() / 2;
  const int reach = std::max(0, width - 1);
  return band(g, width) | select(g, [&](CellIndex c) {
           const auto [r, col] = g.position(c);
           return std::abs(col - h) <= reach && r >= g.rows() / 2 - reach;
         });
}

CellSet blob(const Grid& g, std::uint64_t seed, std::size_t size, std::optional<CellIndex> start) {
  std::mt19937_64 rng(seed);
  CellSet s = g.none();
  if (size == 0) return s;
  std::vector<CellIndex> frontier{start.value_or(static_cast<CellIndex>(rng() % g.size()))};
  while (s.count() < size && !frontier.empty()) {
    const auto pick = static_cast<std::size_t>(rng() % frontier.size());
    const auto c = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (s.contains(c)) continue;
    s.insert(c);
    g.for_each_neighbor(c, Adjacency::Four, [&](CellIndex nb) {
      if (!s.contains(nb)) frontier.push_back(nb);
    });
  }
  // Fill every complement component but the largest.
  auto holes = connected_components(g, s.complement(), Adjacency::Four);
  if (holes.size() > 1) {
    auto largest = std::max_element(holes.begin(), holes.end(),
                                    [](const CellSet& a, const CellSet& b) { return a.count() < b.count(); });
    for (auto it = holes.begin(); it != holes.end(); ++it)
      if (it != largest) s |= *it;
  }
  return s;
}

CellSet from_name(const Grid& g, const DistinguishedGeometry& geo, std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  const bool bare = args.empty();

  if (head == "empty" && bare) return g.none();
  if (head == "full" && bare) return g.all();
  if (head == "border_ring" && bare) return border_ring(g);
  if (head == "center" && bare) return CellSet::of(g.size(), {geo.center});
  if (head == "half_ring") {
    if (args == "left") return half_ring(g, true);
    if (args == "right") return half_ring(g, false);
  }
  if (head == "strip") {
    if (bare) return strip(g, default_width(g));
    return strip(g, static_cast<int>(parse_numbers(args, 1, name)[0]));
  }
  if (head == "band") {
    if (bare) return band(g, default_width(g));
    return band(g, static_cast<int>(parse_numbers(args, 1, name)[0]));
  }
  if (head == "band_and_bar") {
    if (bare) return band_and_bar(g, std::max(3, default_width(g)));
    return band_and_bar(g, static_cast<int>(parse_numbers(args, 1, name)[0]));
  }
  if (head == "disk") {
    if (bare) return disk(g, {0.3, 0.7}, 0.1);
    const auto v = parse_numbers(args, 3, name);
    return disk(g, {v[0], v[1]}, v[2]);
  }
  if (head == "annulus") {
    const auto v = parse_numbers(args, 4, name);
    return annulus(g, {v[0], v[1]}, v[2], v[3]);
  }
  if (head == "rect") {
    const auto v = parse_numbers(args, 4, name);
    return rect(g, {v[0], v[1]}, {v[2], v[3]});
  }
  if (head == "point") {
    const auto v = parse_numbers(args, 2, name);
    return CellSet::of(g.size(), {g.locate(at_unit(g, v[0], v[1]))});
  }
  if (head == "marked" && !bare) {
    const auto slot = marked_slot(args);
    if (slot >= geo.marked.size()) throw ParseError("geometry has no marked point '" + std::string(args) + "'");
    return CellSet::of(g.size(), {geo.marked[slot]});
  }
  if (head == "lens" && !bare) {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ParseError("lens needs two marked points, e.g. lens:p,q");
    const auto a = marked_slot(args.substr(0, comma));
    const auto b = marked_slot(args.substr(comma + 1));
    if (std::max(a, b) >= geo.marked.size()) throw ParseError("lens refers to a missing marked point");
    return stadium(g, g.unit_point(geo.marked[a]), g.unit_point(geo.marked[b]), 0.1);
  }
  if (head == "blob" && !bare) {
    std::vector<double> v;
    if (args.find(',') == std::string_view::npos) {
      v = parse_numbers(args, 1, name);
      v.push_back(static_cast<double>(std::max<std::size_t>(1, g.size() / 10)));
    } else {
      v = parse_numbers(args, 2, name);
    }
    return blob(g, static_cast<std::uint64_t>(v[0]), static_cast<std::size_t>(v[1]));
  }
  throw ParseError("unknown image template '" + std::string(name) + "'");
}

std::vector<Named> standard_family(const Grid& g, const DistinguishedGeometry& geo) {
  const int w = default_width(g);
  const auto ws = std::to_string(w);
  std::vector<std::string> names{
      "empty",          "full",           "border_ring",           "center",
      "half_ring:left", "half_ring:right", "strip",                "disk",
      "disk:0.5,0.5,0.2", "lens:p,q",      "lens:q,r",             "lens:p,r",
      "marked:p",       "marked:r",        "band:" + ws,           "band_and_bar:" + std::to_string(std::max(3, w)),
      "rect:0,0,0.5,1", "rect:0,0.5,1,1",  "rect:0,0,1,0.45",      "rect:0.6,0.1,0.9,0.4",
      "annulus:0.5,0.5,0.15,0.3", "disk:0,0,0.5", "disk:0.25,0.25,0.1", "disk:0.75,0.25,0.12"};
  const auto blob_size = std::max<std::size_t>(1, g.size() / 8);
  for (int seed = 1; seed <= 6; ++seed) names.push_back("blob:" + std::to_string(seed) + "," + std::to_string(blob_size));

  std::vector<Named> out;
  for (const auto& n : names) {
    const auto cells = from_name(g, geo, n);
    out.push_back({n + "#closed", Image::closed(cells)});
    out.push_back({n + "#open", Image::open(cells)});
  }
  return out;
}

std::vector<Named> open_family(const Grid& g, const DistinguishedGeometry& geo) {
  const int w = std::max(3, default_width(g));
  const std::vector<std::string> names{
      "full", "band_and_bar:" + std::to_string(w), "disk:0.5,0.5,0.25", "disk", "lens:p,q",
      "disk:0.25,0.25,0.12", "band:" + std::to_string(w), "rect:0,0,0.625,1", "annulus:0.5,0.5,0.15,0.35",
      "blob:3," + std::to_string(std::max<std::size_t>(1, g.size() / 6))};
  std::vector<Named> out;
  for (const auto& n : names) out.push_back({n, Image::open(from_name(g, geo, n))});
  return out;
}

std::vector<DisjointPair> disjoint_pairs(const Grid& g, const std::vector<Named>& family, std::size_t limit) {
  std::vector<DisjointPair> out;
  for (std::size_t i = 0; i < family.size() && out.size() < limit; ++i) {
    for (std::size_t j = i; j < family.size() && out.size() < limit; ++j) {
      for (const Kind k : {Kind::Closed, Kind::Open}) {
        const auto& a = family[i].image;
        const auto& b = family[j].image;
        if (disjoint_union(g, a, b, k)) {
          out.push_back({family[i].name + " + " + family[j].name, a, b, k});
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<Image, Image>> open_pairs(const Grid& g, const DistinguishedGeometry& geo) {
  const int h = g.cols() / 2;
  const int w = std::max(1, default_width(g));
  const auto left_cols = [&](const CellSet& s, bool left) {
    CellSet out = g.none();
    s.for_each([&](CellIndex c) {
      const int col = g.position(c).col;
      if (left ? col <= h : col >= h) out.insert(c);
    });
    return out;
  };
  std::vector<std::pair<Image, Image>> out;
  for (const int width : {1, w}) {
    const auto ring = band(g, width);
    out.emplace_back(Image::open(left_cols(ring, true)), Image::open(left_cols(ring, false)));
  }
  const auto nbhd = band_and_bar(g, std::max(3, w));
  out.emplace_back(Image::open(left_cols(nbhd, true)), Image::open(left_cols(nbhd, false)));
  out.emplace_back(Image::open(from_name(g, geo, "rect:0,0,0.5,1")), Image::open(from_name(g, geo, "rect:0.5,0,1,1")));
  out.emplace_back(Image::open(from_name(g, geo, "rect:0,0,1,0.5")), Image::open(from_name(g, geo, "rect:0,0.5,1,1")));
  out.emplace_back(Image::open(from_name(g, geo, "disk:0.25,0.25,0.15")), Image::open(from_name(g, geo, "disk:0.4,0.25,0.15")));
  out.emplace_back(Image::open(from_name(g, geo, "disk:0.5,0.5,0.2")), Image::open(border_ring(g)));
  out.emplace_back(Image::open(from_name(g, geo, "rect:0,0,0.6,0.6")), Image::open(from_name(g, geo, "rect:0.4,0.4,1,1")));
  // keep only pairs whose union is representable
  std::vector<std::pair<Image, Image>> valid;
  for (auto& p : out)
    if (open_union(g, p.first, p.second)) valid.push_back(std::move(p));
  return valid;
}

}  // namespace qmlab::shapes
