#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/partition.hpp"
#include "qgrass/permutation.hpp"

namespace qgr {

/// An r-element subset A of [1..n], the universal index for cells, graph
/// vertices and Pluecker coordinates.
///
/// The decomposition A = (L |_r R) uses the convention
///   L = [r] \ A = {a_k < ... < a_1},   R = A \ [r] = {b_1 < ... < b_k},
/// so left(i) = a_i has a_1 maximal and right(i) = b_i has b_1 minimal.
/// By convention a_0 = r + 1 and b_0 = r.
class RSubset {
public:
  RSubset() = default;
  RSubset(int n, std::vector<int> elems);

  static RSubset initial(int n, int r); // [r], the Gale minimum
  static RSubset top(int n, int r);     // {n-r+1, ..., n}, the Gale maximum

  int n() const { return n_; }
  int r() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  int elem(int m) const { return elems_[m - 1]; } // i_m, 1-indexed
  bool contains(int v) const;

  bool operator==(const RSubset&) const = default;
  auto operator<=>(const RSubset&) const = default;

  /// Number of overlap pairs k = |L| = |R|.
  int k() const;
  int a(int i) const; // a_i for 1 <= i <= k; a(0) = r + 1
  int b(int i) const; // b_i for 1 <= i <= k; b(0) = r
  std::vector<int> complement() const;

  /// Single-element swap (A \ j) \cup i; requires j in A, i not in A.
  RSubset swap(int i, int j) const;

  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// Inv(A) = {(i,j) : i < j, j in A, i not in A}, by direct scan.
std::set<std::pair<int, int>> inversions(const RSubset& A);

/// The same set by the two-case closed form: (i, b_p) with i not in A,
/// i < b_p, together with (a_p, j) for j in A cap [r], a_p < j.
std::set<std::pair<int, int>> inversions_closed_form(const RSubset& A);

/// Gale order by the prefix criterion: A <= B iff |A cap [k]| >= |B cap [k]|
/// for all k.  Requires matching (r, n).
bool gale_leq(const RSubset& A, const RSubset& B);

/// The partition (i_r - r, ..., i_2 - 2, i_1 - 1).
Partition subset_to_partition(const RSubset& A);
RSubset partition_to_subset(const Partition& lambda, int r, int n);

/// The Grassmannian permutation w_A: sorted A then sorted complement.
Permutation grassmannian_perm(const RSubset& A);

/// Removes the rim hook of lambda determined by an inversion of the
/// corresponding subset.  Throws if inv is not an inversion.
Partition rim_hook_remove(const Partition& lambda, std::pair<int, int> inv, int r, int n);

/// The boxes of lambda \ mu for mu inside lambda, as (row, col) pairs.
std::vector<std::pair<int, int>> skew_boxes(const Partition& lambda, const Partition& mu);
/// True if the skew shape is a rim hook: connected, no 2 x 2 square.
bool is_rim_hook(const Partition& lambda, const Partition& mu);

/// Box of lambda_A determined by (i,j) in Inv(A): row of north step j,
/// column of east step i.  Rows count from the top (row 1 is longest),
/// columns from the left.  Returns (row, col), 1-indexed.
std::pair<int, int> inversion_box(const RSubset& A, std::pair<int, int> inv);
/// Inverse of inversion_box.
std::pair<int, int> box_inversion(const RSubset& A, int row, int col);

/// All r-subsets of [1..n] in lexicographic order of the element lists.
std::vector<RSubset> all_subsets(int n, int r);

} // namespace qgr
