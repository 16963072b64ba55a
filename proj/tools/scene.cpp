#include "scene.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "qmlab/cell_map.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/mask_io.hpp"
#include "qmlab/shapes.hpp"

namespace qmlab::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    int v = 0;
    const auto field = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) throw ParseError("bad integer list '" + std::string(text) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

// "name#open" / "name#closed"; closed when no suffix is given.
std::pair<std::string, Kind> split_kind(const std::string& name) {
  const auto hash = name.rfind('#');
  if (hash == std::string::npos) return {name, Kind::Closed};
  const auto suffix = name.substr(hash + 1);
  if (suffix == "open") return {name.substr(0, hash), Kind::Open};
  if (suffix == "closed") return {name.substr(0, hash), Kind::Closed};
  throw ParseError("image kind must be #open or #closed in '" + name + "'");
}

Kind parse_kind(const json& spec) {
  const auto k = spec.value("kind", std::string("closed"));
  if (k == "open") return Kind::Open;
  if (k == "closed") return Kind::Closed;
  throw ParseError("image kind must be open or closed, not '" + k + "'");
}

Grid parse_grid(const json& spec, std::optional<int> n_override) {
  Grid g = Grid::square(65);
  if (spec.is_string()) {
    g = Grid::parse_spec(spec.get<std::string>());
  } else if (spec.is_object()) {
    const int n = spec.value("n", 65);
    const auto adj = spec.value("adjacency", std::string("8/4"));
    Connectivity conn;
    if (adj == "8/4") {
      conn = Connectivity::Closed8Open4;
    } else if (adj == "4/8") {
      conn = Connectivity::Closed4Open8;
    } else {
      throw ParseError("adjacency must be 8/4 or 4/8");
    }
    g = Grid::square(n, conn);
  } else if (!spec.is_null()) {
    throw ParseError("grid must be a string or an object");
  }
  if (n_override) g = Grid::square(*n_override, g.connectivity(), g.domain());
  return g;
}

CellMap parse_cell_map(const Grid& g, const json& spec, const std::filesystem::path& base) {
  if (spec.is_object() && spec.contains("csv"))
    return CellMap::from_csv(g, g, read_file(base / spec.at("csv").get<std::string>()));
  if (!spec.is_string()) throw ParseError("cell map must be identity, fold, shift:<dr>,<dc> or {\"csv\": path}");
  const auto s = spec.get<std::string>();
  if (s == "identity") return CellMap::identity(g);
  if (s == "fold") return CellMap::fold(g);
  if (s.rfind("shift:", 0) == 0) {
    const auto v = parse_ints(std::string_view(s).substr(6));
    if (v.size() != 2) throw ParseError("shift needs two offsets");
    return CellMap::shift(g, v[0], v[1]);
  }
  throw ParseError("unknown cell map '" + s + "'");
}

}  // namespace

Scene Scene::standard(int n) {
  json doc = {
      {"grid", {{"n", n}, {"adjacency", "8/4"}}},
      {"functions", json::array({"pyramid", "plane_b", "pyramid_plus_plane", "coords:x", "coords:y"})},
      {"measures",
       {{"aarnes", "aarnes"},
        {"three_point", "three_point"},
        {"dirac:center", "dirac:center"},
        {"mixture", {{"type", "mixture"}, {"weights", {0.5, 0.25, 0.25}}, {"parts", {"aarnes", "three_point", "dirac:center"}}}},
        {"three_point_folded", {{"type", "pushforward"}, {"inner", "three_point"}, {"map", "fold"}}}}},
      {"transforms",
       {{"shift", {{"type", "preimage"}, {"map", "shift:3,-2"}}},
        {"fold", {{"type", "preimage"}, {"map", "fold"}}},
        {"from_simple_aarnes", {{"type", "from_simple"}, {"measure", "aarnes"}, {"target_points", 3}}},
        {"star4", {{"type", "star_restricted"}, {"sample", {"aarnes", "three_point", "dirac:center", "dirac:p"}}}}}},
  };
  return from_json(doc, std::filesystem::current_path());
}

Scene Scene::load(const std::filesystem::path& path, std::optional<int> n_override) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError("scene '" + path.string() + "': " + e.what());
  }
  return from_json(doc, path.parent_path(), n_override);
}

Scene Scene::from_json(const json& doc, const std::filesystem::path& base, std::optional<int> n_override) {
  if (!doc.is_object()) throw ParseError("scene must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    static const std::set<std::string> known{"grid", "geometry", "images", "functions", "measures", "transforms"};
    if (!known.count(key)) throw ParseError("unknown scene key '" + key + "'");
  }
  try {
    const Grid g = parse_grid(doc.value("grid", json()), n_override);
    std::vector<Point> marked;
    if (doc.contains("geometry")) {
      for (const auto& p : doc.at("geometry").value("marked", json::array()))
        marked.push_back(at_unit(g, p.at(0).get<double>(), p.at(1).get<double>()));
    }
    Scene s(g, DistinguishedGeometry::of(g, marked));
    s.base_ = base;

    // Each section is an object of name -> spec, or a list of builtin names.
    const auto entries = [&](const char* key) {
      std::vector<std::pair<std::string, json>> out;
      if (!doc.contains(key)) return out;
      const auto& sec = doc.at(key);
      if (sec.is_array()) {
        for (const auto& v : sec) out.emplace_back(v.get<std::string>(), v);
      } else if (sec.is_object()) {
        for (const auto& [k, v] : sec.items()) out.emplace_back(k, v);
      } else {
        throw ParseError(std::string("scene section '") + key + "' must be an object or a list");
      }
      return out;
    };
    std::set<std::string> names;
    const auto claim = [&](const std::string& name) {
      if (!names.insert(name).second) throw ParseError("duplicate name '" + name + "'");
    };
    for (const auto& [name, spec] : entries("images")) {
      claim(name);
      s.images_.emplace(name, s.build_image(name, spec));
    }
    const auto collect = [&](const char* key, std::map<std::string, json>& specs, std::vector<std::string>& order) {
      for (const auto& [name, spec] : entries(key)) {
        claim(name);
        specs.emplace(name, spec);
        order.push_back(name);
      }
    };
    collect("functions", s.function_specs_, s.function_order_);
    collect("measures", s.measure_specs_, s.measure_order_);
    collect("transforms", s.transform_specs_, s.transform_order_);
    // Build everything now so errors surface at load time.
    for (const auto& name : s.function_order_) s.declared_function(name);
    for (const auto& name : s.measure_order_) s.declared_measure(name);
    for (const auto& name : s.transform_order_) s.declared_transform(name);
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("scene: ") + e.what());
  }
}

CellIndex Scene::point_cell(const json& spec) const {
  if (spec.is_array()) return grid_.locate(at_unit(grid_, spec.at(0).get<double>(), spec.at(1).get<double>()));
  const auto s = spec.get<std::string>();
  if (s == "center") return geo_.center;
  if (s.size() == 1 && s[0] >= 'p' && s[0] <= 'r') {
    const auto i = static_cast<std::size_t>(s[0] - 'p');
    if (i >= geo_.marked.size()) throw ParseError("marked point '" + s + "' is not defined");
    return geo_.marked[i];
  }
  throw ParseError("point must be [x, y], center, p, q or r");
}

Image Scene::build_image(const std::string& name, const json& spec) const {
  if (spec.is_string()) {
    const auto [base, kind] = split_kind(spec.get<std::string>());
    return {shapes::from_name(grid_, geo_, base), kind};
  }
  if (!spec.is_object()) throw ParseError("image '" + name + "' must be a template name or an object");
  if (spec.contains("template")) return {shapes::from_name(grid_, geo_, spec.at("template").get<std::string>()), parse_kind(spec)};
  if (spec.contains("mask")) return mask_from_rows(grid_, spec.at("mask").get<std::vector<std::string>>(), parse_kind(spec));
  if (spec.contains("mask_file")) return read_mask(grid_, read_file(base_ / spec.at("mask_file").get<std::string>()));
  throw ParseError("image '" + name + "' needs template, mask or mask_file");
}

GridFunction Scene::build_function(const std::string& name, const json& spec) const {
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s != name)
      if (const auto* f = declared_function(s)) return f->renamed(name);
    return GridFunction::builtin(grid_, s).renamed(name);
  }
  if (!spec.is_object()) throw ParseError("function '" + name + "' must be a builtin name or an object");
  if (spec.contains("builtin")) return GridFunction::builtin(grid_, spec.at("builtin").get<std::string>()).renamed(name);
  if (spec.contains("csv")) return GridFunction::from_csv(grid_, read_file(base_ / spec.at("csv").get<std::string>()), name);
  for (const char* op : {"sum", "product"}) {
    if (!spec.contains(op)) continue;
    const auto parts = spec.at(op).get<std::vector<std::string>>();
    if (parts.empty()) throw ParseError("function '" + name + "': empty " + op);
    GridFunction acc = function(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = std::string(op) == "sum" ? acc + function(parts[i]) : acc * function(parts[i]);
    return acc.renamed(name);
  }
  throw ParseError("function '" + name + "' needs builtin, csv, sum or product");
}

QuasiMeasure Scene::build_measure(const std::string& name, const json& spec) const {
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s != name)
      if (const auto* m = declared_measure(s)) return *m;
    if (s == "aarnes") return QuasiMeasure::aarnes(grid_, geo_);
    if (s == "three_point") return QuasiMeasure::three_point(grid_, geo_);
    if (s.rfind("dirac:", 0) == 0) {
      const auto arg = s.substr(6);
      if (arg.find(',') != std::string::npos) {
        const auto comma = arg.find(',');
        return QuasiMeasure::dirac(grid_, point_cell(json::array({std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1))})));
      }
      return QuasiMeasure::dirac(grid_, point_cell(arg));
    }
    throw ParseError("unknown measure '" + s + "'");
  }
  if (!spec.is_object() || !spec.contains("type")) throw ParseError("measure '" + name + "' needs a type");
  const auto type = spec.at("type").get<std::string>();
  if (type == "aarnes" || type == "three_point") return build_measure(name, json(type));
  if (type == "dirac") return QuasiMeasure::dirac(grid_, point_cell(spec.at("at")));
  if (type == "mixture") {
    const auto weights = spec.at("weights").get<std::vector<double>>();
    std::vector<QuasiMeasure> parts;
    for (const auto& p : spec.at("parts")) parts.push_back(build_measure(name, p));
    return QuasiMeasure::mixture(weights, parts);
  }
  if (type == "pushforward") {
    const auto inner = build_measure(name, spec.at("inner"));
    return QuasiMeasure::pushforward(inner, parse_cell_map(grid_, spec.at("map"), base_));
  }
  if (type == "pullback") return pullback(transform(spec.at("transform").get<std::string>()), build_measure(name, spec.at("measure")));
  throw ParseError("unknown measure type '" + type + "'");
}

ImageTransformation Scene::build_transform(const std::string& name, const json& spec) const {
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s != name)
      if (const auto* t = declared_transform(s)) return *t;
    return ImageTransformation::preimage(parse_cell_map(grid_, spec, base_));
  }
  if (!spec.is_object() || !spec.contains("type")) throw ParseError("transform '" + name + "' needs a type");
  const auto type = spec.at("type").get<std::string>();
  if (type == "preimage") return ImageTransformation::preimage(parse_cell_map(grid_, spec.at("map"), base_));
  if (type == "from_simple") {
    const auto sigma = build_measure(name, spec.at("measure"));
    const int k = spec.value("target_points", 1);
    return ImageTransformation::from_simple(sigma, Grid::discrete(k));
  }
  if (type == "star_restricted") return ImageTransformation::star_restricted(build_sample(name, spec.at("sample")));
  if (type == "vanishing") return ImageTransformation::vanishing(grid_, grid_);
  if (type == "compose")
    return compose(build_transform(name, spec.at("outer")), build_transform(name, spec.at("inner")));
  throw ParseError("unknown transform type '" + type + "'");
}

std::optional<CellMap> Scene::preimage_map(const std::string& transform) const {
  if (const auto it = maps_.find(transform); it != maps_.end()) return it->second;
  return std::nullopt;
}

std::optional<QuasiMeasure> Scene::simple_source(const std::string& transform) const {
  if (const auto it = sigmas_.find(transform); it != sigmas_.end()) return it->second;
  return std::nullopt;
}

FiniteStarSample Scene::build_sample(const std::string& name, const json& spec) const {
  std::vector<StarMember> members;
  for (const auto& m : spec) {
    const auto label = m.is_string() ? m.get<std::string>() : m.dump();
    members.push_back({label, build_measure(name, m)});
  }
  return FiniteStarSample(std::move(members));
}

std::optional<FiniteStarSample> Scene::star_sample(const std::string& transform) const {
  if (const auto it = samples_.find(transform); it != samples_.end()) return it->second;
  return std::nullopt;
}

namespace {

// Builds a declared entry once, guarding against self-reference.
template <class T, class Build>
const T* resolve(std::map<std::string, T>& built, const std::map<std::string, json>& specs,
                 std::set<std::string>& resolving, const std::string& name, Build build) {
  if (const auto it = built.find(name); it != built.end()) return &it->second;
  const auto spec = specs.find(name);
  if (spec == specs.end()) return nullptr;
  if (!resolving.insert(name).second) throw ParseError("cyclic reference through '" + name + "'");
  T value = build(spec->second);
  resolving.erase(name);
  return &built.emplace(name, std::move(value)).first->second;
}

}  // namespace

const GridFunction* Scene::declared_function(const std::string& name) const {
  return resolve(functions_, function_specs_, resolving_, name, [&](const json& spec) { return build_function(name, spec); });
}

const QuasiMeasure* Scene::declared_measure(const std::string& name) const {
  return resolve(measures_, measure_specs_, resolving_, name, [&](const json& spec) { return build_measure(name, spec); });
}

const ImageTransformation* Scene::declared_transform(const std::string& name) const {
  return resolve(transforms_, transform_specs_, resolving_, name, [&](const json& spec) {
    auto q = build_transform(name, spec);
    const auto type = spec.is_object() ? spec.value("type", std::string()) : std::string();
    if (type == "preimage") maps_.emplace(name, parse_cell_map(grid_, spec.at("map"), base_));
    if (type == "from_simple") sigmas_.emplace(name, build_measure(name, spec.at("measure")));
    if (type == "star_restricted") samples_.emplace(name, build_sample(name, spec.at("sample")));
    return q;
  });
}

Image Scene::image(const std::string& name) const {
  if (const auto it = images_.find(name); it != images_.end()) return it->second;
  return build_image(name, json(name));
}

GridFunction Scene::function(const std::string& name) const {
  if (const auto* f = declared_function(name)) return *f;
  return GridFunction::builtin(grid_, name);
}

QuasiMeasure Scene::measure(const std::string& name) const {
  if (const auto* m = declared_measure(name)) return *m;
  return build_measure(name, json(name));
}

ImageTransformation Scene::transform(const std::string& name) const {
  if (const auto* t = declared_transform(name)) return *t;
  return build_transform(name, json(name));
}

}  // namespace qmlab::cli
