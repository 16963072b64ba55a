#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmlab/cell_map.hpp"
#include "qmlab/geometry.hpp"
#include "qmlab/grid_function.hpp"
#include "qmlab/measure.hpp"
#include "qmlab/transform.hpp"

namespace qmlab::cli {

// Everything a command works on: one grid with its distinguished geometry and
// named images, functions, measures and transformations. Names not declared in
// the scene fall back to built-in templates (shape names, builtin functions,
// "aarnes", "three_point", "dirac:center", ...).
class Scene {
 public:
  // The default scene on an n x n grid.
  static Scene standard(int n);
  // Parses a scene document; `base` resolves relative file references.
  // `n_override` replaces the grid size when given.
  static Scene from_json(const nlohmann::json& doc, const std::filesystem::path& base,
                         std::optional<int> n_override = {});
  static Scene load(const std::filesystem::path& path, std::optional<int> n_override = {});

  const Grid& grid() const { return grid_; }
  const DistinguishedGeometry& geometry() const { return geo_; }

  // Throws ParseError when a name cannot be resolved.
  Image image(const std::string& name) const;
  GridFunction function(const std::string& name) const;
  QuasiMeasure measure(const std::string& name) const;
  ImageTransformation transform(const std::string& name) const;

  // The cell map behind a declared preimage transform, and the measure behind
  // a declared from-simple transform.
  std::optional<CellMap> preimage_map(const std::string& transform) const;
  std::optional<QuasiMeasure> simple_source(const std::string& transform) const;
  std::optional<FiniteStarSample> star_sample(const std::string& transform) const;

  // Declared names, in declaration order.
  const std::vector<std::string>& measure_names() const { return measure_order_; }
  const std::vector<std::string>& transform_names() const { return transform_order_; }
  const std::vector<std::string>& function_names() const { return function_order_; }

 private:
  explicit Scene(Grid g, DistinguishedGeometry geo) : grid_(std::move(g)), geo_(std::move(geo)) {}

  QuasiMeasure build_measure(const std::string& name, const nlohmann::json& spec) const;
  ImageTransformation build_transform(const std::string& name, const nlohmann::json& spec) const;
  GridFunction build_function(const std::string& name, const nlohmann::json& spec) const;
  FiniteStarSample build_sample(const std::string& name, const nlohmann::json& spec) const;
  Image build_image(const std::string& name, const nlohmann::json& spec) const;
  CellIndex point_cell(const nlohmann::json& spec) const;

  // Declared entries are built on first reference, so sections may refer to
  // each other in any order. Cycles are a ParseError.
  const GridFunction* declared_function(const std::string& name) const;
  const QuasiMeasure* declared_measure(const std::string& name) const;
  const ImageTransformation* declared_transform(const std::string& name) const;

  Grid grid_;
  DistinguishedGeometry geo_;
  std::filesystem::path base_;
  std::map<std::string, Image> images_;
  std::map<std::string, nlohmann::json> function_specs_;
  std::map<std::string, nlohmann::json> measure_specs_;
  std::map<std::string, nlohmann::json> transform_specs_;
  mutable std::set<std::string> resolving_;
  mutable std::map<std::string, GridFunction> functions_;
  mutable std::map<std::string, QuasiMeasure> measures_;
  mutable std::map<std::string, ImageTransformation> transforms_;
  mutable std::map<std::string, CellMap> maps_;
  mutable std::map<std::string, QuasiMeasure> sigmas_;
  mutable std::map<std::string, FiniteStarSample> samples_;
  std::vector<std::string> measure_order_;
  std::vector<std::string> transform_order_;
  std::vector<std::string> function_order_;
};

}  // namespace qmlab::cli
