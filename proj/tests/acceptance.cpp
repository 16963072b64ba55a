// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and printed with each line.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "qmlab/errors.hpp"
#include "qmlab/geometry.hpp"
#include "qmlab/integral.hpp"
#include "qmlab/integral_checks.hpp"
#include "qmlab/measure.hpp"
#include "qmlab/shapes.hpp"
#include "qmlab/staircase.hpp"
#include "oracle_3x3.hpp"
#include "scene.hpp"
#include "suites.hpp"
#include "support.hpp"

using namespace qmlab;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

struct Cli {
  int code = 0;
  std::string out;
  std::string err;
};

Cli run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qmlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Cli r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

// Every report passes and each required id is present.
void require_reports(Outcome& o, const std::vector<Report>& reports, const std::vector<std::string>& required) {
  std::map<std::string, Status> by_id;
  for (const auto& r : reports) by_id[r.check] = r.status;
  for (const auto& id : required)
    o.require(by_id.count(id) != 0, "missing report " + id);
  for (const auto& r : reports)
    if (!r.passed()) o.require(false, r.check + " " + std::string(to_string(r.status)));
}

Outcome nonlinear_integral() {
  Outcome o;
  const Grid g = Grid::square(65);
  const auto m = QuasiMeasure::aarnes(g, DistinguishedGeometry::of(g));
  const auto a = GridFunction::pyramid(g);
  const auto b = GridFunction::plane_b(g);
  const double ia = integrate(m, a);
  const double ib = integrate(m, b);
  const double iab = integrate(m, a + b);
  o.require(ia == 0.0 && ib == 0.0 && iab == 1.0, "values " + fmt(ia) + ", " + fmt(ib) + ", " + fmt(iab));
  if (o.pass) o.detail = "mu(a) = 0, mu(b) = 0, mu(a+b) = 1 (exact)";
  return o;
}

Outcome pushforward_dirac() {
  Outcome o;
  const Grid g = Grid::square(65);
  const auto d = pushforward_distribution(QuasiMeasure::aarnes(g, DistinguishedGeometry::of(g)), GridFunction::pyramid(g));
  o.require(d.jumps.size() == 1, std::to_string(d.jumps.size()) + " jumps");
  if (o.pass) o.require(d.jumps[0].t == 0.0 && d.jumps[0].mass == 1.0, "jump " + fmt(d.jumps[0].t) + " mass " + fmt(d.jumps[0].mass));
  if (o.pass) o.detail = "one jump at t = 0 with mass 1 (exact)";
  return o;
}

Outcome aarnes_values() {
  Outcome o;
  const Grid g = Grid::square(65);
  const auto geo = DistinguishedGeometry::of(g);
  const auto m = QuasiMeasure::aarnes(g, geo);
  CellSet center = g.none();
  center.insert(geo.center);
  const CellSet strip = shapes::strip(g, 2);
  o.require(strip.contains(geo.center) && (strip & geo.border).count() > 0, "strip misses center or border");
  const CellSet disk = shapes::disk(g, at_unit(g, 0.25, 0.75), 0.1);
  o.require(!disk.contains(geo.center) && (disk & geo.border).count() == 0, "disk touches center or border");
  const double ring = m.eval({geo.border, Kind::Closed});
  const double point = m.eval({center, Kind::Closed});
  const double bar = m.eval({strip, Kind::Closed});
  const double off = m.eval({disk, Kind::Closed});
  o.require(ring == 1.0 && point == 0.0 && bar == 1.0 && off == 0.0,
            "values " + fmt(ring) + ", " + fmt(point) + ", " + fmt(bar) + ", " + fmt(off));
  if (o.pass) o.detail = "border ring 1, center 0, strip 1, off-center disk 0 (exact)";
  return o;
}

Outcome nonsubadditivity() {
  Outcome o;
  const Grid g = Grid::square(65);
  const auto geo = DistinguishedGeometry::of(g);
  const auto m = QuasiMeasure::aarnes(g, geo);
  const Image left{shapes::half_ring(g, true), Kind::Closed};
  const Image right{shapes::half_ring(g, false), Kind::Closed};
  const Image both{left.cells | right.cells, Kind::Closed};
  o.require(m.eval(left) == 0.0 && m.eval(right) == 0.0 && m.eval(both) == 1.0, "half-ring template pair does not verify");
  const auto r = run_cli({"counterexample", "aarnes", "--budget", "10000", "--seed", "7"});
  o.require(r.code == cli::kOk, "counterexample exit " + std::to_string(r.code));
  if (o.pass) {
    const auto w = json::parse(r.out)["witness"];
    o.require(w.is_object(), "no witness within budget");
    if (o.pass) {
      o.require(w["values"] == json{{"a", "0"}, {"b", "0"}, {"union", "1"}}, "witness values " + w["values"].dump());
      o.require(w["candidates"].get<int>() <= 10000, "budget exceeded");
      if (o.pass)
        o.detail = "witness " + w["origin"].get<std::string>() + " after " + std::to_string(w["candidates"].get<int>()) +
                   " candidate(s): 0 + 0 < 1";
    }
  }
  return o;
}

Outcome simple_multiplicativity() {
  Outcome o;
  const Grid g = Grid::square(65);
  const auto geo = DistinguishedGeometry::of(g);
  const std::vector<QuasiMeasure> sigmas{QuasiMeasure::aarnes(g, geo), QuasiMeasure::three_point(g, geo),
                                         QuasiMeasure::dirac(g, geo.center)};
  const auto maps = standard_value_maps();
  testing::Gen gen(7);
  int cases = 0;
  for (const auto& sigma : sigmas) {
    for (int i = 0; i < 20; ++i) {
      const auto a = gen.continuous_function(g);
      const auto& phi = gen.pick(maps);
      const auto& psi = gen.pick(maps);
      const auto rep = multiplicativity_check(sigma, a, phi, psi);
      ++cases;
      o.require(rep.passed(), sigma.label() + " " + a.name() + " " + phi.name + "*" + psi.name);
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases; exact for polynomial maps, 1e-9 for sin/exp";
  return o;
}

Outcome staircase_lemma() {
  Outcome o;
  const Grid g = Grid::square(33);
  testing::Gen gen(7);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const auto a = gen.coin() ? gen.smooth_function(g) : gen.lattice_function(g, 4, 0.5);
    const auto b = a + gen.lattice_function(g, 3, 0.25).map([](double t) { return std::abs(t); });
    for (double delta : {1.0, 0.1}) {
      const auto rep = staircase_check(a, b, delta);
      ++checked;
      o.require(rep.passed(), "pair " + std::to_string(i) + " delta " + fmt(delta) + ": " + rep.values.dump());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " decompositions; sums within 1e-12, order, product identity exact";
  return o;
}

Outcome small_oracle() {
  using namespace testing;
  Outcome o;
  std::size_t images = 0;
  std::size_t functions = 0;
  for (Connectivity conn : {Connectivity::Closed8Open4, Connectivity::Closed4Open8}) {
    const Grid g = Grid::square(3, conn);
    const auto all = cases(g);
    for (const auto& c : all) {
      for (Mask m = 0; m <= kFull; ++m) {
        for (Kind kind : {Kind::Closed, Kind::Open}) {
          ++images;
          if (c.measure.eval(image_of(g, m, kind)) != c.oracle.eval(m, kind))
            o.require(false, c.name + " mask " + std::to_string(m) + " " + std::string(to_string(kind)));
        }
      }
    }
    std::vector<double> values(9);
    for (int code = 0; code < 19683; ++code) {
      Mask below[3] = {0, 0, 0};
      int rest = code;
      for (int i = 0; i < 9; ++i) {
        const int v = rest % 3;
        rest /= 3;
        values[static_cast<std::size_t>(i)] = v;
        for (int t = v; t < 3; ++t) below[t] |= Mask{1} << i;
      }
      const GridFunction a(g, values, "a");
      ++functions;
      for (const auto& c : all) {
        double expected = 0.0;
        int previous = 0;
        for (int t = 0; t < 3; ++t) {
          const int f = c.oracle.closed(below[t]);
          expected += t * (f - previous);
          previous = f;
        }
        if (integrate(c.measure, a) != expected) o.require(false, c.name + " function code " + std::to_string(code));
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(images) + " image evaluations and " + std::to_string(functions) +
               " functions (both adjacency conventions, 11 measures) agree exactly";
  return o;
}

Outcome transformation_axioms(const cli::Scene& scene) {
  Outcome o;
  const auto family = shapes::standard_family(scene.grid(), scene.geometry());
  o.require(family.size() >= 50, "standard family has " + std::to_string(family.size()) + " images");
  const auto reports = cli::run_suite(scene, "transform-axioms", {7, 10000});
  std::vector<std::string> required;
  for (const char* q : {"shift", "fold", "from_simple_aarnes", "star4"}) {
    for (const char* check : {"transformation_axioms", "transformation_properties", "change_of_variables"})
      required.push_back(std::string("transform-axioms/") + q + "/" + check);
    required.push_back(std::string("transform-axioms/") + q + "*fold/composition");
  }
  require_reports(o, reports, required);
  if (o.pass)
    o.detail = std::to_string(reports.size()) + " reports on " + std::to_string(family.size()) +
               " images; change of variables exact for 0/1 measures, 1e-9 otherwise";
  return o;
}

Outcome factorization(const cli::Scene& scene) {
  Outcome o;
  const auto reports = cli::run_suite(scene, "factorization", {7, 10000});
  std::vector<std::string> required{"factorization/zero_functional/reconstruction_rejects"};
  for (const char* q : {"shift", "fold", "from_simple_aarnes", "star4"}) {
    required.push_back(std::string("factorization/") + q + "/factorization");
    required.push_back(std::string("factorization/") + q + "/reconstruction");
  }
  require_reports(o, reports, required);
  if (o.pass) o.detail = "w recovered with zero residual; r -> q -> r within 1e-9";
  return o;
}

Outcome riesz() {
  Outcome o;
  const Grid g = Grid::square(65);
  const auto geo = DistinguishedGeometry::of(g);
  const auto family = shapes::open_family(g, geo);
  o.require(family.size() == 10, "open family has " + std::to_string(family.size()) + " sets");
  std::vector<std::vector<GridFunction>> subs;
  for (const auto& u : family) {
    subs.push_back(plateau_subordinates(g, u.image));
    o.require(subs.back().size() == 3, u.name + " has " + std::to_string(subs.back().size()) + " subordinates");
    for (const auto& k : subs.back()) o.require(is_subordinate(k, u.image), u.name + " subordinate out of range");
  }
  for (const auto& m : {QuasiMeasure::aarnes(g, geo), QuasiMeasure::three_point(g, geo)}) {
    const auto rep = riesz_roundtrip_check(m, family, subs);
    o.require(rep.passed(), m.label() + ": " + rep.values.dump());
  }
  if (o.pass) o.detail = "aarnes and three_point, 10 open sets, 3 plateau subordinates each (exact)";
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto a = run_cli({"verify", "--suite", "all", "--seed", "7"});
  const auto b = run_cli({"verify", "--suite", "all", "--seed", "7"});
  o.require(a.code == cli::kOk, "first run exit " + std::to_string(a.code));
  o.require(b.code == cli::kOk, "second run exit " + std::to_string(b.code));
  o.require(!a.out.empty() && a.out == b.out, "outputs differ");
  if (o.pass) o.detail = std::to_string(a.out.size()) + " bytes, identical";
  return o;
}

}  // namespace

int main() {
  const auto scene = cli::Scene::standard(65);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"nonlinear integral of the Aarnes square", nonlinear_integral},
      {"pushforward of the pyramid is a point mass at 0", pushforward_dirac},
      {"Aarnes rule values", aarnes_values},
      {"non-subadditivity witness", nonsubadditivity},
      {"simple multiplicativity", simple_multiplicativity},
      {"staircase decomposition", staircase_lemma},
      {"exhaustive 3x3 oracle", small_oracle},
      {"transformation axioms and change of variables", [&] { return transformation_axioms(scene); }},
      {"factorization and reconstruction", [&] { return factorization(scene); }},
      {"Riesz round trip", riesz},
      {"deterministic verify output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%-4s %2zu  %-48s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
