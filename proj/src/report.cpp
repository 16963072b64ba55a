#include "qmlab/report.hpp"

#include <cmath>
#include <cstdio>

namespace qmlab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["property"] = property;
  j["status"] = std::string(to_string(status));
  j["values"] = values;
  if (witness) j["witness"] = *witness;
  return j;
}

nlohmann::json image_json(const Grid& g, const Image& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < g.rows(); ++r) {
    std::string row;
    for (int c = 0; c < g.cols(); ++c) row += a.cells.contains(g.index(r, c)) ? '1' : '0';
    rows.push_back(row);
  }
  return {{"kind", std::string(to_string(a.kind))}, {"mask", rows}};
}

std::string render_value(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  for (long long q = 1; q <= 1024; ++q) {
    const double scaled = v * static_cast<double>(q);
    const double p = std::round(scaled);
    if (std::abs(p) > 1e15) break;
    if (p / static_cast<double>(q) == v) {
      const auto pi = static_cast<long long>(p);
      if (q == 1) return std::to_string(pi);
      return std::to_string(pi) + "/" + std::to_string(q);
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Status combine(const std::vector<Report>& reports) {
  Status s = Status::Pass;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return Status::Fail;
    if (r.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

}  // namespace qmlab
