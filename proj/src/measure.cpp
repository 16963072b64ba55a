#include "qmlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "qmlab/errors.hpp"
#include "qmlab/topology.hpp"

namespace qmlab {

// ---------------------------------------------------------------------------
// SolidRule

SolidRule SolidRule::aarnes_square(const DistinguishedGeometry& geo) {
  SolidRule r;
  r.variant_ = Variant::AarnesSquare;
  r.border_ = geo.border;
  r.border_total_ = geo.border.count();
  r.center_ = geo.center;
  r.has_center_ = true;
  r.point_set_ = CellSet(geo.border.universe());
  return r;
}

SolidRule SolidRule::three_point(const DistinguishedGeometry& geo) {
  if (geo.marked.size() != 3) throw PreconditionViolation("three-point rule needs exactly three marked points");
  SolidRule r;
  r.variant_ = Variant::ThreePoint;
  r.border_ = CellSet(geo.border.universe());
  r.points_ = geo.marked;
  r.point_set_ = CellSet::of(geo.border.universe(), geo.marked);
  return r;
}

SolidRule SolidRule::dirac(std::size_t universe, CellIndex cell) {
  if (cell >= universe) throw PreconditionViolation("point mass outside the grid");
  SolidRule r;
  r.variant_ = Variant::DiracAt;
  r.border_ = CellSet(universe);
  r.points_ = {cell};
  r.point_set_ = CellSet::of(universe, {cell});
  return r;
}

SolidRule::Tally SolidRule::tally_cell(CellIndex c) const {
  Tally t;
  t.border = border_.contains(c) ? 1 : 0;
  t.points = point_set_.contains(c) ? 1 : 0;
  t.center = has_center_ && c == center_;
  return t;
}

SolidRule::Tally SolidRule::tally(const CellSet& s) const {
  Tally t;
  t.border = (s & border_).count();
  t.points = (s & point_set_).count();
  t.center = has_center_ && s.contains(center_);
  return t;
}

bool SolidRule::decide(const Tally& t) const {
  switch (variant_) {
    case Variant::AarnesSquare:
      return t.border == border_total_ || (t.border > 0 && t.center);
    case Variant::ThreePoint:
      // (number of points)/3 > 1/2
      return 2 * t.points > 3;
    case Variant::DiracAt:
      return t.points > 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Extension chain

namespace {

// Value of a closed image under the extension of a solid rule: every
// component F contributes 1 - Σ rule(U) over the complement components U of F.
//
// Complement components are found on the adjacency graph whose nodes are the
// components of the image (region adjacency) and of its complement
// (complement adjacency), joined when complement-adjacent. Removing the node
// of F splits the graph into exactly the complement components of F, and the
// rule only needs the tallies summed over each piece.
double closed_value(const Grid& g, const SolidRule& rule, const CellSet& s) {
  if (s.empty()) return 0.0;
  const auto inner = label_components(g, s, g.region_adjacency());
  const auto outer = label_components(g, s.complement(), g.complement_adjacency());
  const int k = inner.count;
  const int total = k + outer.count;

  std::vector<SolidRule::Tally> tally(static_cast<std::size_t>(total));
  std::vector<int> node(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) {
    node[c] = inner.label[c] >= 0 ? inner.label[c] : k + outer.label[c];
    tally[static_cast<std::size_t>(node[c])] += rule.tally_cell(c);
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (CellIndex c = 0; c < g.size(); ++c) {
    g.for_each_neighbor(c, g.complement_adjacency(), [&](CellIndex nb) {
      if (node[c] != node[nb]) adj[static_cast<std::size_t>(node[c])].push_back(node[nb]);
    });
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  double value = 0.0;
  std::vector<int> seen(static_cast<std::size_t>(total), -1);
  std::vector<int> stack;
  for (int f = 0; f < k; ++f) {
    int hits = 0;
    seen[static_cast<std::size_t>(f)] = f;
    for (int start : adj[static_cast<std::size_t>(f)]) {
      if (seen[static_cast<std::size_t>(start)] == f) continue;
      SolidRule::Tally piece;
      seen[static_cast<std::size_t>(start)] = f;
      stack.push_back(start);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        piece += tally[static_cast<std::size_t>(v)];
        for (int w : adj[static_cast<std::size_t>(v)]) {
          if (seen[static_cast<std::size_t>(w)] != f) {
            seen[static_cast<std::size_t>(w)] = f;
            stack.push_back(w);
          }
        }
      }
      if (rule.decide(piece)) ++hits;
    }
    const int term = 1 - hits;
    if (term != 0 && term != 1)
      throw InvariantViolation("closed component evaluates to " + std::to_string(term) +
                               " (" + std::to_string(hits) + " complement components carry the rule)");
    value += term;
  }
  if (value > 1.0)
    throw InvariantViolation("closed image evaluates to " + std::to_string(value) + " > 1");
  return value;
}

double rule_value(const Grid& g, const SolidRule& rule, const Image& a) {
  if (rule.variant() == SolidRule::Variant::DiracAt)
    return a.cells.contains(rule.points().front()) ? 1.0 : 0.0;
  if (a.is_closed()) return closed_value(g, rule, a.cells);
  return 1.0 - closed_value(g, rule, a.cells.complement());
}

double reference_closed(const Grid& g, const SolidRule& rule, const CellSet& s) {
  double value = 0.0;
  for (const auto& f : connected_components(g, s, g.region_adjacency())) {
    int term = 1;
    for (const auto& u : connected_components(g, f.complement(), g.complement_adjacency())) {
      if (!is_solid(g, Image::open(u)))
        throw InvariantViolation("complement component of a closed connected set is not solid");
      if (rule.holds(u)) --term;
    }
    if (term != 0 && term != 1)
      throw InvariantViolation("closed component evaluates to " + std::to_string(term));
    value += term;
  }
  if (value > 1.0) throw InvariantViolation("closed image evaluates to " + std::to_string(value) + " > 1");
  return value;
}

}  // namespace

double eval_reference(const Grid& g, const SolidRule& rule, const Image& a) {
  if (g.is_discrete()) throw PreconditionViolation("the extension chain needs a connected square grid");
  require_on(g, a, "eval_reference");
  if (a.is_closed()) return reference_closed(g, rule, a.cells);
  return 1.0 - reference_closed(g, rule, a.cells.complement());
}

// ---------------------------------------------------------------------------
// QuasiMeasure

struct QuasiMeasure::Node {
  Variant variant;
  Grid grid;
  std::string label;
  bool exact = true;
  std::optional<SolidRule> rule;
  std::vector<QuasiMeasure> parts;
  std::vector<double> weights;
  std::optional<CellMap> map;
  std::function<Image(const Image&)> image_map;

  Node(Variant v, Grid g, std::string l) : variant(v), grid(std::move(g)), label(std::move(l)) {}
};

QuasiMeasure QuasiMeasure::from_rule(const Grid& g, SolidRule rule, std::string label) {
  if (g.is_discrete() && rule.variant() != SolidRule::Variant::DiracAt)
    throw PreconditionViolation("solid-set constructions need a connected square grid");
  auto node = std::make_shared<Node>(Variant::FromSolidRule, g, std::move(label));
  node->rule = std::move(rule);
  return QuasiMeasure(std::move(node));
}

QuasiMeasure QuasiMeasure::aarnes(const Grid& g, const DistinguishedGeometry& geo) {
  return from_rule(g, SolidRule::aarnes_square(geo), "aarnes");
}

QuasiMeasure QuasiMeasure::three_point(const Grid& g, const DistinguishedGeometry& geo) {
  return from_rule(g, SolidRule::three_point(geo), "three_point");
}

QuasiMeasure QuasiMeasure::dirac(const Grid& g, CellIndex cell) {
  const auto rc = g.position(cell);
  return from_rule(g, SolidRule::dirac(g.size(), cell),
                   "dirac(" + std::to_string(rc.row) + "," + std::to_string(rc.col) + ")");
}

QuasiMeasure QuasiMeasure::pushforward(const QuasiMeasure& inner, const CellMap& f) {
  if (!(f.from() == inner.grid()))
    throw SpaceMismatch("pushforward: map source " + f.from().spec() + " is not the measure's grid " + inner.grid().spec());
  auto node = std::make_shared<Node>(Variant::Pushforward, f.to(), "push(" + inner.label() + ")");
  node->exact = inner.exact();
  node->parts = {inner};
  node->map = f;
  return QuasiMeasure(std::move(node));
}

QuasiMeasure QuasiMeasure::mixture(const std::vector<double>& weights, const std::vector<QuasiMeasure>& parts) {
  if (weights.size() != parts.size() || parts.empty())
    throw PreconditionViolation("mixture needs one weight per part and at least one part");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw PreconditionViolation("mixture weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw PreconditionViolation("mixture weights sum to " + std::to_string(sum) + ", not 1");
  std::string label = "mix(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].grid() == parts[0].grid())) throw SpaceMismatch("mixture parts live on different grids");
    label += (i ? "," : "") + parts[i].label();
  }
  auto node = std::make_shared<Node>(Variant::Mixture, parts[0].grid(), label + ")");
  node->exact = false;
  node->parts = parts;
  node->weights = weights;
  return QuasiMeasure(std::move(node));
}

QuasiMeasure QuasiMeasure::pulled_back(const Grid& source, std::function<Image(const Image&)> map,
                                       const QuasiMeasure& target, std::string label) {
  auto node = std::make_shared<Node>(Variant::Pullback, source, std::move(label));
  node->exact = target.exact();
  node->parts = {target};
  node->image_map = std::move(map);
  return QuasiMeasure(std::move(node));
}

const Grid& QuasiMeasure::grid() const { return node_->grid; }
const std::string& QuasiMeasure::label() const { return node_->label; }
QuasiMeasure::Variant QuasiMeasure::variant() const { return node_->variant; }
const SolidRule* QuasiMeasure::rule() const { return node_->rule ? &*node_->rule : nullptr; }
bool QuasiMeasure::exact() const { return node_->exact; }

double QuasiMeasure::eval(const Image& a) const {
  const Node& n = *node_;
  require_on(n.grid, a, "eval");
  switch (n.variant) {
    case Variant::FromSolidRule:
      return rule_value(n.grid, *n.rule, a);
    case Variant::Pushforward:
      return n.parts[0].eval(preimage(*n.map, a));
    case Variant::Pullback:
      return n.parts[0].eval(n.image_map(a));
    case Variant::Mixture: {
      double v = 0.0;
      for (std::size_t i = 0; i < n.parts.size(); ++i) v += n.weights[i] * n.parts[i].eval(a);
      if (v < -1e-12 || v > 1.0 + 1e-12)
        throw InvariantViolation("mixture value " + std::to_string(v) + " outside [0,1]");
      return v;
    }
  }
  return 0.0;
}

}  // namespace qmlab
