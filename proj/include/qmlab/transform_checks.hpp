#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmlab/report.hpp"
#include "qmlab/shapes.hpp"
#include "qmlab/transform.hpp"

namespace qmlab {

// q(X) = Y for both kinds, kinds preserved, q(A ⊎ B) = q(A) ⊎ q(B) on the
// pairs, and regularity: for each open U the largest closed K inside q(U) is
// covered by q(L) for some L = erode(U, d), d in witness_depths.
Report check_axioms(const ImageTransformation& q, const std::vector<shapes::DisjointPair>& pairs,
                    const std::vector<Image>& open_sets, const std::vector<int>& witness_depths = {0, 1, 2});

// q(A^c) = q(A)^c, A ⊆ B ⇒ q(A) ⊆ q(B), A ∩ B = ∅ ⇒ q(A) ∩ q(B) = ∅ on the
// family, and q(U_k) increasing to q(U) along each chain of open images.
Report derived_properties_check(const ImageTransformation& q, const std::vector<shapes::Named>& family,
                                const std::vector<std::vector<Image>>& chains = {});

// (q*μ)(a) = μ(q(a)); exact for exact μ, within 1e-9 otherwise.
Report change_of_variables_transform_check(const ImageTransformation& q, const QuasiMeasure& mu, const GridFunction& a);

// For p ∘ q: images agree with p(q(A)), q∘p induced functions compose, and
// pulled-back measures satisfy (p∘q)*μ = q*(p*μ).
Report composition_check(const ImageTransformation& p, const ImageTransformation& q, const std::vector<Image>& family,
                         const std::vector<GridFunction>& functions, const std::vector<QuasiMeasure>& measures);

// Level-set identity q(a ≤ t) = (q(a) ≤ t) and q(φ(a)) = φ(q(a)) for the maps.
Report level_set_check(const ImageTransformation& q, const GridFunction& a,
                       const std::vector<std::function<double(double)>>& maps = {});

struct Factorization {
  std::vector<std::string> w;  // sample label per target point
  Report residual;
};

// Matches q*δ_y against the sample on `match_family` for every target point y,
// then checks q(A) = {y : w(y)(A) = 1} on `verify_family`. Throws
// UncoveredPoint when no member matches some q*δ_y.
Factorization factorize(const ImageTransformation& q, const FiniteStarSample& sample,
                        const std::vector<Image>& match_family, const std::vector<Image>& verify_family);

// A candidate quasi-homomorphism: sends a function on the source grid to a
// function on the target grid.
using Functional = std::function<GridFunction(const GridFunction&)>;

struct Reconstruction {
  ImageTransformation q;
  Report report;
};

// Checks r(1) = 1 and r(φ(a)ψ(a)) = r(φ(a)) r(ψ(a)) on the basis (else throws
// NotAQuasiHomomorphism), builds q(U) as the union over k subordinate to U of
// {y : r(k)(y) > 0} (closed images by complement), and verifies q(a) = r(a) on
// the basis within 1e-9.
Reconstruction reconstruct_from_homomorphism(const Grid& source, const Grid& target, const Functional& r,
                                             const std::vector<GridFunction>& basis);

}  // namespace qmlab
