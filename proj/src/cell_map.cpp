#include "qmlab/cell_map.hpp"

#include <algorithm>
#include <sstream>

#include "qmlab/errors.hpp"

namespace qmlab {

CellMap::CellMap(Grid from, Grid to, std::vector<CellIndex> targets)
    : from_(std::move(from)), to_(std::move(to)), targets_(std::move(targets)) {
  if (targets_.size() != from_.size()) throw SpaceMismatch("cell map size does not match its source grid");
  for (auto t : targets_)
    if (t >= to_.size()) throw SpaceMismatch("cell map target out of range");
}

CellMap CellMap::identity(const Grid& g) {
  std::vector<CellIndex> t(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) t[c] = c;
  return {g, g, std::move(t)};
}

CellMap CellMap::shift(const Grid& g, int drow, int dcol) {
  std::vector<CellIndex> t(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) {
    const auto [r, col] = g.position(c);
    t[c] = g.index(std::clamp(r + drow, 0, g.rows() - 1), std::clamp(col + dcol, 0, g.cols() - 1));
  }
  return {g, g, std::move(t)};
}

CellMap CellMap::fold(const Grid& g) {
  std::vector<CellIndex> t(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) {
    const auto [r, col] = g.position(c);
    t[c] = g.index(r, std::min(col, g.cols() - 1 - col));
  }
  return {g, g, std::move(t)};
}

CellMap CellMap::constant(const Grid& from, const Grid& to, CellIndex target) {
  return {from, to, std::vector<CellIndex>(from.size(), target)};
}

CellMap CellMap::then(const CellMap& next) const {
  if (!(to_ == next.from_)) throw SpaceMismatch("cannot chain cell maps: " + to_.spec() + " vs " + next.from_.spec());
  std::vector<CellIndex> t(targets_.size());
  for (CellIndex c = 0; c < targets_.size(); ++c) t[c] = next.targets_[targets_[c]];
  return {from_, next.to_, std::move(t)};
}

bool CellMap::is_continuous() const {
  for (CellIndex c = 0; c < from_.size(); ++c) {
    bool ok = true;
    from_.for_each_neighbor(c, from_.region_adjacency(), [&](CellIndex nb) {
      const auto a = targets_[c];
      const auto b = targets_[nb];
      if (a == b) return;
      bool adjacent = false;
      to_.for_each_neighbor(a, to_.region_adjacency(), [&](CellIndex x) { adjacent = adjacent || x == b; });
      ok = ok && adjacent;
    });
    if (!ok) return false;
  }
  return true;
}

std::string CellMap::to_csv() const {
  std::ostringstream out;
  out << "from,to\n";
  for (CellIndex c = 0; c < targets_.size(); ++c) out << c << ',' << targets_[c] << '\n';
  return out.str();
}

CellMap CellMap::from_csv(const Grid& from, const Grid& to, std::string_view text) {
  std::vector<CellIndex> t(from.size(), to.size());
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "from,to" || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("cell map line " + std::to_string(lineno) + ": expected 'from,to'");
    std::size_t a = 0;
    std::size_t b = 0;
    try {
      a = std::stoul(line.substr(0, comma));
      b = std::stoul(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw ParseError("cell map line " + std::to_string(lineno) + ": not an index pair");
    }
    if (a >= from.size() || b >= to.size())
      throw ParseError("cell map line " + std::to_string(lineno) + ": index out of range");
    t[a] = b;
  }
  for (CellIndex c = 0; c < t.size(); ++c)
    if (t[c] == to.size()) throw ParseError("cell map leaves cell " + std::to_string(c) + " unmapped");
  return {from, to, std::move(t)};
}

Image preimage(const CellMap& f, const Image& a) {
  require_on(f.to(), a, "preimage");
  CellSet out(f.from().size());
  for (CellIndex c = 0; c < f.from().size(); ++c)
    if (a.cells.contains(f(c))) out.insert(c);
  return {std::move(out), a.kind};
}

}  // namespace qmlab
