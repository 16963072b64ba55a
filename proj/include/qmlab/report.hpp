#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmlab/grid.hpp"

namespace qmlab {

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

// Outcome of one executable check. A failing report always carries a witness
// or the discrepant values.
struct Report {
  Report() = default;
  Report(std::string check_id, std::string property_text)
      : check(std::move(check_id)), property(std::move(property_text)) {}

  std::string check;
  std::string property;  // the identity or axiom being checked, in words
  Status status = Status::Pass;
  nlohmann::json values = nlohmann::json::object();
  std::optional<nlohmann::json> witness;

  bool passed() const { return status == Status::Pass; }
  nlohmann::json to_json() const;
};

// {"kind": ..., "mask": [rows]}
nlohmann::json image_json(const Grid& g, const Image& a);

// Exact rendering of values that are ratios of small integers ("1", "1/2",
// "17/32"); otherwise 12 significant digits.
std::string render_value(double v);

// Combines reports: fail if any failed, else inconclusive if any was, else pass.
Status combine(const std::vector<Report>& reports);

}  // namespace qmlab
