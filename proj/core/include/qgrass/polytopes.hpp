#pragma once

#include <string>
#include <vector>

#include "qgrass/composition.hpp"
#include "qgrass/subset.hpp"

namespace qgr {

/// One inequality sum_{q=lo}^{hi} z_q (sense) rhs over the coordinates.
struct IntervalInequality {
  int lo = 0, hi = 0;
  int rhs = 0;
  bool at_most = false; // true: <=, false: >=
  int family = 0;       // 2: interval upper bounds, 3: suffix lower bounds
};

/// H-description of the moment polytope of a cell closure: a subset of
/// [0,1]^n cap {sum z = r} cut out by fixed coordinates and interval sums.
struct HPolytope {
  int n = 0, r = 0;
  std::vector<std::pair<int, int>> fixed; // (coordinate, value in {0,1})
  std::vector<IntervalInequality> inequalities;

  bool contains_indicator(const RSubset& b) const;
};

/// The moment polytope of the cell closure indexed by A: fixed
/// coordinates outside the support interval, upper bounds over the block
/// intervals, and lower bounds over the inter-anchor suffixes.
HPolytope h_description(const RSubset& a);

/// The E/D interval decomposition of {r-l+1, ..., r-l+1+|alpha|} attached
/// to the zigzag parse of alpha: E_1..E_k left to right on the low side,
/// D_k..D_1 left to right on the high side.
struct IntervalDecomposition {
  int r = 0;
  std::vector<std::pair<int, int>> e_intervals; // E_1..E_k as [lo,hi]
  std::vector<std::pair<int, int>> d_intervals; // D_1..D_k as [lo,hi]
  int e_index(int value) const;                 // 1-based, 0 if absent
  int d_index(int value) const;
};
IntervalDecomposition interval_decomposition(const Composition& alpha, int r);

/// alpha-admissibility of B: pair the p-th smallest missing value with the
/// p-th largest overlap value (the arcs nested outermost first) and require
/// the interleaving j_1 <= i_1 < j_2 <= i_2 < ... against the E/D indices.
bool is_admissible(const Composition& alpha, int r, const RSubset& b);
std::vector<RSubset> admissible_sets(const Composition& alpha, int r, int n);

/// 0/1 points of the polytope: indicators of r-subsets satisfying it.
std::vector<RSubset> zero_one_points(const HPolytope& p);

/// Subproduct orbit of [r] under the zigzag transpositions of alpha.
std::vector<RSubset> zigzag_fixed_points(const Composition& alpha, int r, int n);

/// Fixed points of the translated Richardson model: x^{-1} B over
/// nu <= lambda_B <= eta for the ribbon eta/nu of alpha.
std::vector<RSubset> richardson_fixed_points(const Composition& alpha, int r, int n);
/// The translating permutation x = w_nu * w used above.
Permutation richardson_translation(const Composition& alpha, int r, int n);

/// Affine dimension of the convex hull of the 0/1 points (exact rank of
/// the difference lattice).
int polytope_dimension(const std::vector<RSubset>& points);

/// Maximal compositions |alpha| = n-1 in Comp_{r,n}; the component index
/// set, of size binom(n-2, r-1).
std::vector<Composition> components(int r, int n);

/// The uniform extension of alpha to a maximal composition: prepend
/// (a, 1^b) with b = r - l(alpha) - 1 when l(alpha) < r, else grow the
/// first part.
Composition maximal_extension(const Composition& alpha, int r, int n);

/// Face order on Comp_{r,n}: alpha <= beta iff fixed points are contained.
struct FacePoset {
  std::vector<Composition> elements;
  std::vector<std::vector<bool>> leq; // leq[i][j]: elements[i] <= elements[j]
};
FacePoset face_poset(int r, int n);
std::string face_poset_dot(const FacePoset& poset);

} // namespace qgr
