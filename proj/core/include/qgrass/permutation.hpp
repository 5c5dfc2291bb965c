#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgr {

/// A permutation of [1..n] in one-line notation, 1-indexed values.
///
/// Cycles are accepted as input and produced for display in the backwards
/// convention used throughout (a block {b_1 < ... < b_s} acts as the cycle
/// (b_s, b_{s-1}, ..., b_1), i.e. b_j -> b_{j-1} and b_1 -> b_s), but the
/// stored representation is always the one-line word.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  /// Backwards cycle on a sorted block {b_1 < ... < b_s} inside S_n.
  static Permutation backwards_cycle(int n, const std::vector<int>& block);
  /// Transposition (i j) in S_n.
  static Permutation transposition(int n, int i, int j);

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& oneline() const { return word_; }

  Permutation inverse() const;
  /// Composition: (*this * rhs)(i) = (*this)(rhs(i)).
  Permutation operator*(const Permutation& rhs) const;

  bool operator==(const Permutation& rhs) const = default;
  auto operator<=>(const Permutation& rhs) const = default;

  bool is_identity() const;

  /// Left inversion set {(i,j) : i<j, w^{-1}(i) > w^{-1}(j)}.
  std::set<std::pair<int, int>> inversions() const;
  long long length() const;
  /// Descent set {i : w(i) > w(i+1)}.
  std::set<int> descents() const;

  /// Right multiplication by the simple transposition s_k (swap positions).
  Permutation times_s(int k) const;
  /// Setwise image of a sorted set of values.
  std::vector<int> act(const std::vector<int>& values) const;

  /// Disjoint cycle supports, each sorted increasingly, ordered by minimum.
  /// Fixed points appear as singleton blocks.
  std::vector<std::vector<int>> cycle_blocks() const;

  std::string to_string() const;

private:
  std::vector<int> word_;
};

/// Bruhat order u <= v via the dot criterion: for every prefix length i the
/// sorted set u([i]) is entrywise <= the sorted set v([i]).
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Longest element n, n-1, ..., 1.
Permutation longest_element(int n);

} // namespace qgr
