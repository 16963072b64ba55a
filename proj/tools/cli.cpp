#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "qmlab/errors.hpp"
#include "qmlab/integral.hpp"
#include "qmlab/mask_io.hpp"
#include "qmlab/measure_checks.hpp"
#include "scene.hpp"
#include "suites.hpp"

namespace qmlab::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string scene_path;
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
  std::string json_path;
  std::string suite = "all";
  std::string measure;
  std::string target;  // image or function name
};

Scene load_scene(const Options& o) {
  if (o.scene_path.empty()) return Scene::standard(o.n.value_or(65));
  return Scene::load(o.scene_path, o.n);
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  out << text;
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + o.json_path + "'");
    f << text;
  }
}

json value_json(double v) { return {{"value", v}, {"rendered", render_value(v)}}; }

std::string rows_text(const Grid& g, const Image& a) {
  const auto mask = write_mask(g, a);
  return mask.substr(mask.find('\n') + 1);
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const Scene s = load_scene(o);
  const auto m = s.measure(o.measure);
  const auto a = s.image(o.target);
  const double v = m.eval(a);
  json doc = {{"command", "eval"}, {"grid", s.grid().spec()}, {"measure", o.measure}, {"image", o.target}};
  doc.update(value_json(v));
  emit(doc, o, out);
  err << o.measure << "(" << o.target << ") = " << render_value(v) << "\n";
  return kOk;
}

int cmd_integrate(const Options& o, std::ostream& out, std::ostream& err) {
  const Scene s = load_scene(o);
  const auto m = s.measure(o.measure);
  const auto a = s.function(o.target);
  const auto d = pushforward_distribution(m, a);
  const double v = d.mean();
  json jumps = json::array();
  for (const auto& j : d.jumps) jumps.push_back({{"t", j.t}, {"mass", j.mass}});
  json doc = {{"command", "integrate"}, {"grid", s.grid().spec()}, {"measure", o.measure}, {"function", o.target},
              {"distribution", jumps}};
  doc.update(value_json(v));
  emit(doc, o, out);
  err << o.measure << "(" << o.target << ") = " << render_value(v) << "\n";
  for (const auto& j : d.jumps) err << "  jump at " << render_value(j.t) << " mass " << render_value(j.mass) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Scene s = load_scene(o);
  const auto reports = run_suite(s, o.suite, {o.seed, o.budget});
  json list = json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.check.size());
  for (const auto& r : reports) {
    list.push_back(r.to_json());
    ++counts[std::string(to_string(r.status))];
    err << std::left << std::setw(static_cast<int>(width) + 2) << r.check << to_string(r.status) << "\n";
  }
  json doc = {{"command", "verify"}, {"grid", s.grid().spec()}, {"suite", o.suite}, {"seed", o.seed},
              {"budget", o.budget}, {"reports", list}, {"summary", counts}};
  emit(doc, o, out);
  err << counts["pass"] << " pass, " << counts["fail"] << " fail, " << counts["inconclusive"] << " inconclusive\n";
  return counts["fail"] > 0 ? kCheckFailed : kOk;
}

int cmd_counterexample(const Options& o, std::ostream& out, std::ostream& err) {
  const Scene s = load_scene(o);
  const auto m = s.measure(o.measure);
  const auto w = find_nonsubadditive_witness(m, s.geometry(), {o.budget, o.seed, true});
  json doc = {{"command", "counterexample"}, {"grid", s.grid().spec()}, {"measure", o.measure},
              {"seed", o.seed},               {"budget", o.budget}};
  if (!w) {
    doc["witness"] = nullptr;
    emit(doc, o, out);
    err << "none within budget " << o.budget << "\n";
    return kOk;
  }
  const auto& g = s.grid();
  doc["witness"] = {{"origin", w->origin},
                    {"candidates", w->candidates},
                    {"a", image_json(g, w->a)},
                    {"b", image_json(g, w->b)},
                    {"values", {{"a", render_value(w->value_a)}, {"b", render_value(w->value_b)}, {"union", render_value(w->value_joined)}}}};
  emit(doc, o, out);
  err << "witness " << w->origin << " after " << w->candidates << " candidates\n";
  err << "A: value " << render_value(w->value_a) << "\n" << rows_text(g, w->a);
  err << "B: value " << render_value(w->value_b) << "\n" << rows_text(g, w->b);
  err << "A u B: value " << render_value(w->value_joined) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-measures, quasi-integrals and image transformations on grids"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--scene", o.scene_path, "Scene JSON file (default: built-in scene)");
  app.add_option("--n", o.n, "Grid size, an odd integer >= 3 (default 65)");
  app.add_option("--seed", o.seed, "Seed for sampled checks and searches");
  app.add_option("--budget", o.budget, "Candidate budget of the witness search");
  app.add_option("--json", o.json_path, "Also write the JSON output to this file");
  app.add_option("--suite", o.suite, "Suite for verify: measure-axioms, integral-props, transform-axioms, riesz, factorization, all");

  auto* eval = app.add_subcommand("eval", "Evaluate a measure on an image");
  eval->add_option("measure", o.measure)->required();
  eval->add_option("image", o.target)->required();
  auto* integ = app.add_subcommand("integrate", "Integrate a function against a measure");
  integ->add_option("measure", o.measure)->required();
  integ->add_option("function", o.target)->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* counter = app.add_subcommand("counterexample", "Search closed A, B with mu(A u B) > mu(A) + mu(B)");
  counter->add_option("measure", o.measure)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kLoadError;
  }
  if (o.n && (*o.n < 3 || *o.n % 2 == 0)) {
    err << "error: --n must be an odd integer >= 3\n";
    return kLoadError;
  }

  try {
    if (*eval) return cmd_eval(o, out, err);
    if (*integ) return cmd_integrate(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    return cmd_counterexample(o, out, err);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kLoadError;
  }
}

}  // namespace qmlab::cli
