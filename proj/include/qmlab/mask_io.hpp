#pragma once

#include <string>
#include <string_view>

#include "qmlab/grid.hpp"

namespace qmlab {

// ASCII mask: a "kind: open|closed" header, then one line of 0/1 per grid row,
// row 0 at the top.
std::string write_mask(const Grid& g, const Image& a);
Image read_mask(const Grid& g, std::string_view text);

// Rows only, no header; for inline masks in scene files.
Image mask_from_rows(const Grid& g, const std::vector<std::string>& rows, Kind kind);

}  // namespace qmlab
