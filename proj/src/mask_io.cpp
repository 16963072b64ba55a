#include "qmlab/mask_io.hpp"

#include <sstream>
#include <vector>

#include "qmlab/errors.hpp"

namespace qmlab {

std::string write_mask(const Grid& g, const Image& a) {
  require_on(g, a, "write_mask");
  std::string out = "kind: ";
  out += to_string(a.kind);
  out += '\n';
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) out += a.cells.contains(g.index(r, c)) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Image mask_from_rows(const Grid& g, const std::vector<std::string>& rows, Kind kind) {
  if (rows.size() != static_cast<std::size_t>(g.rows()))
    throw ParseError("mask has " + std::to_string(rows.size()) + " rows, grid has " + std::to_string(g.rows()));
  Image a = Image::empty(g, kind);
  for (int r = 0; r < g.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (row.size() != static_cast<std::size_t>(g.cols()))
      throw ParseError("mask row " + std::to_string(r) + " has wrong width");
    for (int c = 0; c < g.cols(); ++c) {
      const char ch = row[static_cast<std::size_t>(c)];
      if (ch == '1') {
        a.cells.insert(g.index(r, c));
      } else if (ch != '0') {
        throw ParseError("mask row " + std::to_string(r) + ": unexpected character");
      }
    }
  }
  return a;
}

Image read_mask(const Grid& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty mask");
  Kind kind;
  if (line == "kind: open") {
    kind = Kind::Open;
  } else if (line == "kind: closed") {
    kind = Kind::Closed;
  } else {
    throw ParseError("mask header must be 'kind: open' or 'kind: closed'");
  }
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  return mask_from_rows(g, rows, kind);
}

}  // namespace qmlab
