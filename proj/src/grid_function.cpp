#include "qmlab/grid_function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qmlab/errors.hpp"

namespace qmlab {

GridFunction::GridFunction(Grid g, std::vector<double> values, std::string name)
    : grid_(std::move(g)), values_(std::move(values)), name_(std::move(name)) {
  if (values_.size() != grid_.size())
    throw PreconditionViolation("function has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(grid_.size()) + " cells");
  for (const double v : values_)
    if (!std::isfinite(v)) throw PreconditionViolation("function values must be finite");
}

GridFunction GridFunction::constant(const Grid& g, double c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "constant:%.12g", c);
  return {g, std::vector<double>(g.size(), c), buf};
}

GridFunction GridFunction::from_unit(const Grid& g, const std::function<double(double, double)>& f, std::string name) {
  std::vector<double> v(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) {
    const auto p = g.unit_point(c);
    v[c] = f(p.x, p.y);
  }
  return {g, std::move(v), std::move(name)};
}

GridFunction GridFunction::pyramid(const Grid& g) {
  return from_unit(
      g, [](double u, double v) { return 1.0 - 2.0 * std::max(std::abs(u - 0.5), std::abs(v - 0.5)); }, "pyramid");
}

GridFunction GridFunction::plane_b(const Grid& g) {
  return from_unit(g, [](double, double v) { return std::max(0.0, 2.0 * (v - 0.5)); }, "plane_b");
}

GridFunction GridFunction::coords_x(const Grid& g) {
  return from_unit(g, [](double u, double) { return u; }, "coords:x");
}

GridFunction GridFunction::coords_y(const Grid& g) {
  return from_unit(g, [](double, double v) { return v; }, "coords:y");
}

GridFunction GridFunction::indicator(const Grid& g, const CellSet& s, std::string name) {
  std::vector<double> v(g.size(), 0.0);
  s.for_each([&](CellIndex c) { v[c] = 1.0; });
  return {g, std::move(v), std::move(name)};
}

GridFunction GridFunction::builtin(const Grid& g, std::string_view name) {
  if (name == "pyramid") return pyramid(g);
  if (name == "plane_b") return plane_b(g);
  if (name == "pyramid_plus_plane") return (pyramid(g) + plane_b(g)).renamed("pyramid_plus_plane");
  if (name == "coords:x") return coords_x(g);
  if (name == "coords:y") return coords_y(g);
  if (name.substr(0, 9) == "constant:") {
    const auto arg = name.substr(9);
    double c = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), c);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) throw ParseError("bad constant in '" + std::string(name) + "'");
    return constant(g, c);
  }
  throw ParseError("unknown function '" + std::string(name) + "'");
}

double GridFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }
double GridFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }

std::vector<double> GridFunction::distinct_values() const {
  std::vector<double> v = values_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

GridFunction GridFunction::map(const std::function<double(double)>& phi, std::string name) const {
  std::vector<double> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), phi);
  return {grid_, std::move(v), std::move(name)};
}

GridFunction GridFunction::renamed(std::string name) const { return {grid_, values_, std::move(name)}; }

bool GridFunction::leq(const GridFunction& other) const {
  if (!(grid_ == other.grid_)) throw SpaceMismatch("functions live on different grids");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

std::string GridFunction::to_csv() const {
  std::string out;
  char buf[32];
  for (int r = 0; r < grid_.rows(); ++r) {
    for (int c = 0; c < grid_.cols(); ++c) {
      if (c > 0) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", values_[grid_.index(r, c)]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

GridFunction GridFunction::from_csv(const Grid& g, std::string_view text, std::string name) {
  std::vector<double> v;
  v.reserve(g.size());
  std::istringstream in{std::string(text)};
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++rows;
    std::size_t cols = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const auto end = std::min(line.find(',', pos), line.size());
      std::string field = line.substr(pos, end - pos);
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(field, &used);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + field + "' in row " + std::to_string(rows - 1));
      }
      if (used != field.size()) throw ParseError("bad number '" + field + "' in row " + std::to_string(rows - 1));
      v.push_back(x);
      ++cols;
      pos = end + 1;
    }
    if (cols != static_cast<std::size_t>(g.cols())) throw ParseError("row " + std::to_string(rows - 1) + " has wrong width");
  }
  if (rows != g.rows()) throw ParseError("csv has " + std::to_string(rows) + " rows, grid has " + std::to_string(g.rows()));
  return {g, std::move(v), std::move(name)};
}

namespace {

template <class Op>
GridFunction zip(const GridFunction& a, const GridFunction& b, Op op, const char* sym) {
  if (!(a.grid() == b.grid())) throw SpaceMismatch("functions live on different grids");
  std::vector<double> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(a.values()[i], b.values()[i]);
  return {a.grid(), std::move(v), a.name() + sym + b.name()};
}

}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) { return zip(a, b, std::plus<>{}, "+"); }
GridFunction operator-(const GridFunction& a, const GridFunction& b) { return zip(a, b, std::minus<>{}, "-"); }
GridFunction operator*(const GridFunction& a, const GridFunction& b) { return zip(a, b, std::multiplies<>{}, "*"); }

GridFunction operator*(double s, const GridFunction& a) {
  return a.map([s](double x) { return s * x; }, a.name());
}

GridFunction operator+(const GridFunction& a, double c) {
  return a.map([c](double x) { return x + c; }, a.name());
}

bool is_well_composed(const GridFunction& a) {
  const Grid& g = a.grid();
  if (g.is_discrete()) return true;
  for (int r = 0; r + 1 < g.rows(); ++r) {
    for (int c = 0; c + 1 < g.cols(); ++c) {
      const double v00 = a[g.index(r, c)];
      const double v11 = a[g.index(r + 1, c + 1)];
      const double v01 = a[g.index(r, c + 1)];
      const double v10 = a[g.index(r + 1, c)];
      if (std::max(v00, v11) < std::min(v01, v10) || std::max(v01, v10) < std::min(v00, v11)) return false;
    }
  }
  return true;
}

bool resolves_levels(const GridFunction& a) {
  const Grid& g = a.grid();
  if (g.is_discrete()) return true;
  const auto levels = a.distinct_values();
  std::vector<std::ptrdiff_t> rank(g.size());
  for (CellIndex c = 0; c < g.size(); ++c)
    rank[c] = std::lower_bound(levels.begin(), levels.end(), a[c]) - levels.begin();
  for (CellIndex c = 0; c < g.size(); ++c) {
    bool ok = true;
    g.for_each_neighbor(c, Adjacency::Eight, [&](CellIndex nb) {
      if (std::abs(rank[c] - rank[nb]) > 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

double max_distance(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) throw SpaceMismatch("functions live on different grids");
  double d = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  return d;
}

}  // namespace qmlab
