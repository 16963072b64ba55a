#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmlab/report.hpp"
#include "scene.hpp"

namespace qmlab::cli {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
};

// measure-axioms, integral-props, transform-axioms, riesz, factorization
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all", in a fixed order. Throws
// ParseError for an unknown suite name. A check that raises is reported as
// failed with the error message.
std::vector<Report> run_suite(const Scene& scene, const std::string& suite, const SuiteOptions& options);

}  // namespace qmlab::cli
