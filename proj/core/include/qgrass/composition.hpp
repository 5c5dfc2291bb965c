#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/partition.hpp"

namespace qgr {

/// A composition: a (possibly empty) sequence of positive integers.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;
  bool empty() const { return parts_.empty(); }

  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;

  /// Partial sums excluding the total: Des(alpha) = {a_1, a_1+a_2, ...}.
  std::set<int> descents() const;

  /// Ribbon diagram fits in an r x (n-r) rectangle:
  /// length <= r and size - length + 1 <= n - r.
  bool fits_in_box(int r, int n) const;

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// The composition of m with descent set des (a subset of [1, m-1]).
Composition composition_from_descents(int m, const std::set<int>& des);

/// True if beta refines alpha (alpha is obtained by summing consecutive
/// runs of beta); equivalently |beta| = |alpha| and Des(beta) >= Des(alpha).
bool refines(const Composition& beta, const Composition& alpha);

/// All compositions of m with at most max_len parts.
std::vector<Composition> compositions_of(int m, int max_len);

/// Comp_{r,n}, graded by size, lexicographic within a degree.
std::vector<Composition> compositions_in_box(int r, int n);

/// The unique parse alpha = d_1 1^{e_1 - 1} (d_2 + 1) 1^{e_2 - 1} ...
/// (d_k + 1) 1^{e_k - 1} with all d_i, e_i >= 1.  Empty alpha has k = 0.
struct ZigzagParse {
  std::vector<int> d;
  std::vector<int> e;
  int k() const { return static_cast<int>(d.size()); }
};
ZigzagParse zigzag_parse(const Composition& alpha);
Composition zigzag_unparse(const ZigzagParse& p);

/// Bijection Comp <-> Part through Frobenius coordinates: partial sums of
/// the d's give the arms, partial sums of the e's give the legs.  Under it
/// |alpha| = OHL(lambda).  The same map is computed independently through
/// r-subsets and quasigrassmannian permutations in the noncrossing module.
Partition comp_to_partition(const Composition& alpha);
Composition partition_to_comp(const Partition& lambda);

/// The Frobenius symbol printed by the source bijection, evaluated verbatim:
/// its second leg entry is a d-sum where the rest of the row uses e-sums.
/// Kept as data so the suspected misprint can be reported against
/// comp_to_partition rather than silently corrected.
FrobeniusSymbol printed_frobenius_of_comp(const Composition& alpha);

/// The ribbon skew shape eta/nu of row lengths alpha, placed with its
/// extreme boxes in the first column and first row (last row starts in
/// column 1, consecutive rows overlap in exactly one column).
/// Returns {eta, nu}.  Empty alpha gives two empty partitions.
std::pair<Partition, Partition> ribbon_shape(const Composition& alpha);

} // namespace qgr
