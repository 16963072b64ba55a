#include "qmlab/transform.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "qmlab/errors.hpp"
#include "qmlab/integral.hpp"

namespace qmlab {

FiniteStarSample::FiniteStarSample(std::vector<StarMember> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionViolation("a star sample needs at least one member");
  std::set<std::string> seen;
  for (const auto& m : members_) {
    if (!seen.insert(m.label).second) throw PreconditionViolation("duplicate sample label '" + m.label + "'");
    if (!(m.measure.grid() == members_.front().measure.grid()))
      throw SpaceMismatch("sample members live on different grids");
  }
}

FiniteStarSample FiniteStarSample::diracs(const Grid& g) {
  std::vector<StarMember> members;
  members.reserve(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) {
    auto d = QuasiMeasure::dirac(g, c);
    members.push_back({d.label(), d});
  }
  return FiniteStarSample(std::move(members));
}

bool FiniteStarSample::all_simple(const std::vector<Image>& family) const {
  for (const auto& m : members_)
    for (const auto& a : family) {
      const double v = m.measure.eval(a);
      if (v != 0.0 && v != 1.0) return false;
    }
  return true;
}

struct ImageTransformation::Node {
  Variant variant;
  Grid source;
  Grid target;
  std::string label;
  std::function<Image(const Image&)> map;
  std::vector<std::string> target_labels;
};

namespace {

std::vector<std::string> position_labels(const Grid& g) {
  std::vector<std::string> out;
  out.reserve(g.size());
  for (CellIndex c = 0; c < g.size(); ++c) {
    const auto rc = g.position(c);
    out.push_back(std::to_string(rc.row) + "," + std::to_string(rc.col));
  }
  return out;
}

}  // namespace

ImageTransformation ImageTransformation::preimage(const CellMap& f) {
  return ImageTransformation(std::make_shared<const Node>(Node{
      Variant::Preimage, f.to(), f.from(), "preimage", [f](const Image& a) { return qmlab::preimage(f, a); },
      position_labels(f.from())}));
}

ImageTransformation ImageTransformation::from_simple(const QuasiMeasure& sigma, const Grid& target) {
  auto map = [sigma, target](const Image& a) {
    const double v = sigma.eval(a);
    if (v == 1.0) return Image::whole(target, a.kind);
    if (v == 0.0) return Image::empty(target, a.kind);
    throw InvariantViolation("'" + sigma.label() + "' is not simple: value " + std::to_string(v));
  };
  return ImageTransformation(std::make_shared<const Node>(
      Node{Variant::FromSimple, sigma.grid(), target, "from_simple(" + sigma.label() + ")", map, position_labels(target)}));
}

ImageTransformation ImageTransformation::star_restricted(const FiniteStarSample& sample) {
  const Grid target = Grid::discrete(static_cast<int>(sample.size()));
  auto map = [sample, target](const Image& a) {
    Image out = Image::empty(target, a.kind);
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const auto& m = sample.members()[i];
      const double v = m.measure.eval(a);
      if (v == 1.0) {
        out.cells.insert(i);
      } else if (v != 0.0) {
        throw InvariantViolation("sample member '" + m.label + "' is not simple: value " + std::to_string(v));
      }
    }
    return out;
  };
  std::vector<std::string> labels;
  for (const auto& m : sample.members()) labels.push_back(m.label);
  return ImageTransformation(std::make_shared<const Node>(
      Node{Variant::StarRestricted, sample.grid(), target, "star_restricted", map, std::move(labels)}));
}

ImageTransformation ImageTransformation::vanishing(const Grid& source, const Grid& target) {
  return ImageTransformation(std::make_shared<const Node>(Node{
      Variant::Vanishing, source, target, "vanishing", [target](const Image& a) { return Image::empty(target, a.kind); },
      position_labels(target)}));
}

ImageTransformation ImageTransformation::from_function(const Grid& source, const Grid& target,
                                                       std::function<Image(const Image&)> map, std::string label) {
  return ImageTransformation(std::make_shared<const Node>(
      Node{Variant::Reconstructed, source, target, std::move(label), std::move(map), position_labels(target)}));
}

const Grid& ImageTransformation::source() const { return node_->source; }
const Grid& ImageTransformation::target() const { return node_->target; }
ImageTransformation::Variant ImageTransformation::variant() const { return node_->variant; }
const std::string& ImageTransformation::label() const { return node_->label; }
std::vector<std::string> ImageTransformation::target_labels() const { return node_->target_labels; }

Image ImageTransformation::apply(const Image& a) const {
  require_on(node_->source, a, "apply");
  Image out = node_->map(a);
  if (out.kind != a.kind) throw InvariantViolation("transformation '" + node_->label + "' changed the kind of an image");
  return out;
}

ImageTransformation compose(const ImageTransformation& p, const ImageTransformation& q) {
  if (!(q.target() == p.source()))
    throw SpaceMismatch("cannot compose: target " + q.target().spec() + " is not source " + p.source().spec());
  auto map = [p, q](const Image& a) { return p.apply(q.apply(a)); };
  return ImageTransformation(std::make_shared<const ImageTransformation::Node>(
      ImageTransformation::Node{ImageTransformation::Variant::Composite, q.source(), p.target(),
                                p.label() + " o " + q.label(), map, p.target_labels()}));
}

QuasiMeasure pullback(const ImageTransformation& q, const QuasiMeasure& mu) {
  if (!(mu.grid() == q.target())) throw SpaceMismatch("pullback: measure does not live on the target grid");
  return QuasiMeasure::pulled_back(
      q.source(), [q](const Image& a) { return q.apply(a); }, mu, q.label() + "*" + mu.label());
}

GridFunction induced_function(const ImageTransformation& q, const GridFunction& a) {
  if (!(a.grid() == q.source())) throw SpaceMismatch("induced_function: function does not live on the source grid");
  const auto t = a.distinct_values();
  std::vector<std::optional<CellSet>> applied(t.size());
  const auto level = [&](std::size_t i) -> const CellSet& {
    if (!applied[i]) applied[i] = q.apply(sublevel(a, t[i])).cells;
    return *applied[i];
  };
  const Grid& target = q.target();
  std::vector<double> out(target.size());
  const std::size_t top = t.size() - 1;
  for (CellIndex y = 0; y < target.size(); ++y) {
    if (!level(top).contains(y))
      throw InvariantViolation("transformation '" + q.label() + "' does not send the whole space onto the target");
    std::size_t lo = 0;
    std::size_t hi = top;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (level(mid).contains(y)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    out[y] = t[lo];
  }
  return {target, std::move(out), q.label() + "(" + a.name() + ")"};
}

}  // namespace qmlab
