#pragma once

#include <string>
#include <vector>

namespace qgr {

/// Frobenius symbol of a partition: arm and leg lengths of the diagonal
/// boxes, the box itself excluded.  Rows are strictly decreasing and have
/// equal length.
struct FrobeniusSymbol {
  std::vector<int> arms;
  std::vector<int> legs;

  bool operator==(const FrobeniusSymbol&) const = default;
};

/// An integer partition: weakly decreasing positive parts.  Trailing zeros
/// are stripped on construction; the empty partition has no parts.  Box
/// membership (Part_{r,n}) is a predicate, not part of the type.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i <= length() ? parts_[i - 1] : 0; } // 1-indexed, 0 beyond
  long long size() const;
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  /// Containment of Young diagrams.
  bool contains(const Partition& mu) const;
  /// Fits in an r x (n-r) rectangle: length <= r and first part <= n-r.
  bool fits_in_box(int r, int n) const;

  Partition conjugate() const;
  FrobeniusSymbol frobenius() const;
  static Partition from_frobenius(const FrobeniusSymbol& f);

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// Outer hook length lambda_1 + ell(lambda) - 1, with OHL(empty) = 0.
int ohl(const Partition& lambda);

/// All partitions fitting in an r x (n-r) rectangle, in a fixed order
/// (graded by size, lexicographic within a degree).
std::vector<Partition> partitions_in_box(int r, int n);

/// All partitions of m with at most max_len parts, each at most max_part.
std::vector<Partition> partitions_of(int m, int max_len, int max_part);

} // namespace qgr
