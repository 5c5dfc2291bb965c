#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgrass/int_types.hpp"
#include "qgrass/johnson.hpp"
#include "qgrass/noncrossing.hpp"
#include "qgrass/polynomial.hpp"
#include "qgrass/subset.hpp"

namespace qgr {

enum class Entry : std::uint8_t { Zero, One, Free };

/// The {0,1,free} pattern of a Schubert-type cell chart.  The matrix
/// representative is n x r; storage is transposed (r rows of length n),
/// matching the display convention.  M(i, j) addresses the entry in row
/// i of [n] and column j of [r] of the untransposed representative.
class CellChart {
public:
  CellChart(const RSubset& a, bool restrict_to_invq);

  const RSubset& base() const { return base_; }
  int n() const { return base_.n(); }
  int r() const { return base_.r(); }
  Entry at(int i, int j) const { return grid_[(j - 1) * n() + (i - 1)]; }

  /// Free positions as (i, j) matrix coordinates with their inversions.
  const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& free_positions() const {
    return free_;
  }
  int free_count() const { return static_cast<int>(free_.size()); }

  /// Text rendering as a {0,1,*} grid, transposed display, one row per column of
  /// the representative.
  std::string render() const;

private:
  RSubset base_;
  std::vector<Entry> grid_; // transposed: r rows of n entries
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> free_; // ((i,j), inversion)
};

CellChart schubert_chart(const RSubset& a);
CellChart nc_chart(const RSubset& a);

/// Exact n x r integer matrix.
struct ExactMatrix {
  int nrows = 0, ncols = 0;
  std::vector<Int> data;
  ExactMatrix() = default;
  ExactMatrix(int nr, int nc) : nrows(nr), ncols(nc), data(std::size_t(nr) * nc) {}
  Int& at(int i, int j) { return data[std::size_t(i - 1) * ncols + (j - 1)]; } // 1-indexed
  const Int& at(int i, int j) const { return data[std::size_t(i - 1) * ncols + (j - 1)]; }
};

/// The Pluecker coordinate Delta_A: determinant of the rows of M indexed
/// by A.  M must be n x r with r = |A|.
Int minor(const ExactMatrix& m, const RSubset& a);

/// Sign in Delta_{(A\a_j) cup i} / Delta_A = +- M_{i,j} on the chart of A,
/// derived by evaluating the canonical one-free-entry filling.
int ratio_sign(const RSubset& a, std::pair<int, int> inversion);

/// Seeded random integer filling of a chart; free entries uniform in
/// [-1000, 1000] (optionally excluding 0).
ExactMatrix random_fill(const CellChart& chart, std::uint64_t seed, bool nonzero_frees);

struct VanishingReport {
  int r = 0, n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  long long products_checked = 0;
  bool all_removed_products_vanish = true;
  bool converse_found_everywhere = true; // generic full-chart probe
  std::vector<std::string> failures;
};

/// Samples every nc chart and checks the removed-edge products vanish
/// exactly; also probes the converse on full charts with a forbidden entry
/// forced nonzero.
VanishingReport verify_vanishing(int r, int n, int samples, std::uint64_t seed);

/// A subset of the boxes of an ambient partition.
struct LeDiagram {
  Partition lambda;
  std::set<std::pair<int, int>> boxes; // (row, col), 1-indexed
};

/// The boxes of lambda_A indexed by InvQ(A).
LeDiagram le_of(const RSubset& a);

/// The Le condition together with the noncrossing condition.
bool is_noncrossing_le(const LeDiagram& l);

/// The planar directed network of a noncrossing Le diagram inside the
/// chart of A.  Edges run from row labels through boxes to column labels;
/// a walk contributes the product of the weights of boxes entered
/// horizontally.
struct GammaNetwork {
  RSubset base;
  LeDiagram diagram;
  /// All directed walks from boundary j to boundary i, each listed as the
  /// boxes entered horizontally.
  std::map<std::pair<int, int>, std::vector<std::vector<std::pair<int, int>>>> paths;
};
GammaNetwork gamma_network(const RSubset& a, const LeDiagram& l);

/// The chart point of the cell with free coordinates the network path
/// sums, sign-normalized so that Delta ratios equal the path sums.
/// Weights are indexed by the boxes of l in row-major order.
ExactMatrix network_point(const RSubset& a, const LeDiagram& l, const std::vector<Int>& weights);

/// Entries as polynomials in one variable per box (x_k = weight of the
/// k-th box in row-major order), for symbolic verification.
std::vector<std::vector<IntPolynomial>> network_point_symbolic(const RSubset& a,
                                                               const LeDiagram& l);

/// Total nonnegativity probe: all maximal minors of m are >= 0.
bool totally_nonnegative(const ExactMatrix& m, int r, int n);

/// Coordinate analysis of the projection from a noncrossing flag cell.
struct FlagProjectionReport {
  NcPermutation w;
  int r = 0;
  /// {(i, w^{-1}(j)) : (i,j) in InvNC(w)} - the flag chart positions.
  std::set<std::pair<int, int>> positions;
  /// Inversions of A = w([r]) hit by surviving coordinates.
  std::set<std::pair<int, int>> surviving;
  /// Coordinates with both flag positions on the same side of r.
  std::vector<std::pair<int, int>> kernel_coordinates;
  bool bijective_onto_invq = false;
};
FlagProjectionReport flag_projection_pattern(const NcPermutation& w, int r);

} // namespace qgr
