#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qgrass/composition.hpp"
#include "qgrass/permutation.hpp"
#include "qgrass/subset.hpp"

namespace qgr {

/// A noncrossing partition of [1..n], stored both as a permutation (the
/// product of backwards cycles) and as its block structure (sorted blocks,
/// ordered by minimum, singletons included).
class NcPermutation {
public:
  NcPermutation() = default;

  /// From a set partition; throws if blocks cross or do not cover [1..n].
  static NcPermutation from_blocks(int n, std::vector<std::vector<int>> blocks);
  /// From a permutation; empty if it is not a product of backwards cycles
  /// of a noncrossing set partition.
  static std::optional<NcPermutation> from_permutation(const Permutation& w);

  int n() const { return perm_.n(); }
  const Permutation& perm() const { return perm_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Index of the block containing v (0-based into blocks()).
  int block_of(int v) const;

  bool operator==(const NcPermutation&) const = default;
  auto operator<=>(const NcPermutation&) const = default;

  /// Setwise image of [r].
  RSubset act_initial(int r) const;

private:
  Permutation perm_;
  std::vector<std::vector<int>> blocks_;
};

/// True if the blocks form a noncrossing set partition of [1..n].
bool is_noncrossing_blocks(int n, const std::vector<std::vector<int>>& blocks);

/// Default cap for NC_n enumeration (Catalan(12) = 208012); override with
/// the QGRASS_MAX_N environment variable.
int nc_enumeration_bound();

/// All of NC_n by recursive noncrossing block placement.
std::vector<NcPermutation> enumerate_nc(int n);

/// Noncrossing descents {k in Des(w) : w s_k in NC_n}, computed by the
/// criterion k in {w(k), w(k+1)}.
std::set<int> nc_descents(const NcPermutation& w);
/// The definitional test, kept as an oracle.
std::set<int> nc_descents_definitional(const NcPermutation& w);

/// The quasigrassmannian permutation z_A: the product over the (L |_r R)
/// overlap data of the backwards cycles on {a_i} cup [b_{i-1}+1, b_i].
NcPermutation z_of(const RSubset& A);

/// The fiber NC_n^A = {w in NC_n : w([r]) = A}.
std::vector<NcPermutation> fiber(const RSubset& A);

/// Noncrossing inversions by the explicit two-case criterion: j largest in
/// its cycle, and either i in the same cycle, or i maximal with
/// i < j < w^{-1}(i).
std::set<std::pair<int, int>> inv_nc(const NcPermutation& w);
/// Brute-force oracle: {(i,j) in Inv(w) : (i j) w in NC_n}.
std::set<std::pair<int, int>> inv_nc_definitional(const NcPermutation& w);

/// The Split/Merge closed form for InvNC(z_A); its size is OHL(lambda_A).
std::set<std::pair<int, int>> split_merge_invnc(const RSubset& A);

/// Composition attached to a quasigrassmannian permutation via the block
/// sizes (|B_{a_k}| - 1, |B_{a_k + 1}|, ..., |B_r|).  Throws if the
/// noncrossing descent set is not contained in {r}.
Composition comp_of(const NcPermutation& w, int r);

/// The A with z_A = w, read off as w([r]).
RSubset subset_of_qgrass(const NcPermutation& w, int r);

/// Upward Kreweras covers: merge two blocks, keep the merges that stay
/// noncrossing.  Each cover satisfies cover * u^{-1} = transposition.
std::vector<NcPermutation> kreweras_covers(const NcPermutation& u);

/// A zigzag tree: the path-shaped plane binary tree of a composition.  The
/// internal nodes v_1 (root), ..., v_m are ordered root to terminal; node
/// v_{t+1} hangs on the right of v_t exactly when t is a descent of alpha.
/// Leaves are labelled by the support interval [r - l(alpha) + 1,
/// r - l(alpha) + 1 + |alpha|].
class ZigzagTree {
public:
  ZigzagTree(const Composition& alpha, int r, int n);

  int internal_count() const { return m_; }
  const Composition& alpha() const { return alpha_; }
  int leaf_lo() const { return lo_; }
  int leaf_hi() const { return hi_; }

  /// tau_v for each internal node, root to terminal: (rightmost leaf under
  /// the left child, rightmost leaf under the node).
  const std::vector<std::pair<int, int>>& transpositions() const { return taus_; }

  /// The noncrossing partition obtained by deleting, at every internal node
  /// that is a right child, the edge to its left child, and reading each
  /// component as a backwards cycle.  Equals z_{A(alpha)}.
  NcPermutation to_noncrossing() const;

private:
  Composition alpha_;
  int r_ = 0, n_ = 0, m_ = 0, lo_ = 0, hi_ = 0;
  std::vector<bool> right_step_; // step t: v_{t+1} is a right child
  std::vector<std::pair<int, int>> taus_;
};

} // namespace qgr
