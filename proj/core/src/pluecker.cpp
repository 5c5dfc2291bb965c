#include "qgrass/pluecker.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qgr {

CellChart::CellChart(const RSubset& a, bool restrict_to_invq) : base_(a) {
  const int n = a.n(), r = a.r();
  grid_.assign(std::size_t(n) * r, Entry::Zero);
  auto set = [&](int i, int j, Entry e) { grid_[(j - 1) * n + (i - 1)] = e; };
  for (int m = 1; m <= r; ++m) set(a.elem(m), m, Entry::One);
  const auto allowed = restrict_to_invq ? split_merge_invnc(a) : inversions(a);
  for (auto [i, j] : inversions(a)) {
    if (!allowed.count({i, j})) continue;
    // The inversion (i, a_m) puts a free coordinate at matrix entry (i, m).
    int m = 0;
    for (int t = 1; t <= r; ++t)
      if (a.elem(t) == j) m = t;
    set(i, m, Entry::Free);
    free_.push_back({{i, m}, {i, j}});
  }
  std::sort(free_.begin(), free_.end());
}

CellChart schubert_chart(const RSubset& a) { return CellChart(a, false); }
CellChart nc_chart(const RSubset& a) { return CellChart(a, true); }

std::string CellChart::render() const {
  std::ostringstream os;
  for (int j = 1; j <= r(); ++j) {
    os << '[';
    for (int i = 1; i <= n(); ++i) {
      if (i > 1) os << ' ';
      switch (at(i, j)) {
        case Entry::Zero: os << '0'; break;
        case Entry::One: os << '1'; break;
        case Entry::Free: os << '*'; break;
      }
    }
    os << "]\n";
  }
  return os.str();
}

Int minor(const ExactMatrix& m, const RSubset& a) {
  const int r = a.r();
  if (m.ncols != r || m.nrows != a.n())
    throw std::invalid_argument("minor: matrix is not n x r for this subset");
  // Fraction-free (Bareiss) elimination on the selected rows.
  std::vector<std::vector<Int>> w(r, std::vector<Int>(r));
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) w[x][y] = m.at(a.elem(x + 1), y + 1);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < r - 1; ++k) {
    if (w[k][k] == 0) {
      int swap_row = -1;
      for (int x = k + 1; x < r; ++x)
        if (w[x][k] != 0) {
          swap_row = x;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(w[k], w[swap_row]);
      sign = -sign;
    }
    for (int x = k + 1; x < r; ++x)
      for (int y = k + 1; y < r; ++y)
        w[x][y] = (w[x][y] * w[k][k] - w[x][k] * w[k][y]) / prev;
    prev = w[k][k];
  }
  return r == 0 ? Int(1) : Int(sign * w[r - 1][r - 1]);
}

int ratio_sign(const RSubset& a, std::pair<int, int> inversion) {
  const auto [i, j] = inversion;
  const CellChart chart = schubert_chart(a);
  ExactMatrix m(a.n(), a.r());
  for (int t = 1; t <= a.r(); ++t) m.at(a.elem(t), t) = 1;
  int col = 0;
  for (int t = 1; t <= a.r(); ++t)
    if (a.elem(t) == j) col = t;
  if (col == 0 || a.contains(i)) throw std::invalid_argument("ratio_sign: not an inversion");
  m.at(i, col) = 1;
  const Int d = minor(m, a.swap(i, j));
  if (d != 1 && d != -1) throw std::logic_error("ratio_sign: canonical minor not a unit");
  return d == 1 ? 1 : -1;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

ExactMatrix random_fill(const CellChart& chart, std::uint64_t seed, bool nonzero_frees) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  ExactMatrix m(chart.n(), chart.r());
  const RSubset& a = chart.base();
  for (int t = 1; t <= a.r(); ++t) m.at(a.elem(t), t) = 1;
  for (const auto& [pos, inv] : chart.free_positions()) {
    int v = dist(rng);
    while (nonzero_frees && v == 0) v = dist(rng);
    m.at(pos.first, pos.second) = v;
  }
  return m;
}

VanishingReport verify_vanishing(int r, int n, int samples, std::uint64_t seed) {
  VanishingReport rep;
  rep.r = r;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  const auto removed = removed_edges(r, n);
  const auto cells = all_subsets(n, r);
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const CellChart chart = nc_chart(cells[ci]);
    for (int s = 0; s < samples; ++s) {
      const auto m = random_fill(chart, splitmix64(seed + ci * 1000003ULL + s), false);
      for (const auto& [lo, up] : removed) {
        ++rep.products_checked;
        if (minor(m, lo) * minor(m, up) != 0) {
          rep.all_removed_products_vanish = false;
          rep.failures.push_back("removed product nonzero on cell " + cells[ci].to_string() +
                                 " at edge {" + lo.to_string() + "," + up.to_string() + "}");
        }
      }
    }
    // Converse probe: a full-chart point with every free entry (hence some
    // forbidden entry) nonzero must violate some removed-edge product.
    const CellChart full = schubert_chart(cells[ci]);
    if (full.free_count() > chart.free_count() && !removed.empty()) {
      bool found = false;
      for (int s = 0; s < samples && !found; ++s) {
        const auto m = random_fill(full, splitmix64(seed ^ 0xabcdef ^ (ci * 7919ULL + s)), true);
        for (const auto& [lo, up] : removed)
          if (minor(m, lo) * minor(m, up) != 0) {
            found = true;
            break;
          }
      }
      if (!found) {
        rep.converse_found_everywhere = false;
        rep.failures.push_back("no nonzero removed product found on full chart of " +
                               cells[ci].to_string());
      }
    }
  }
  return rep;
}

LeDiagram le_of(const RSubset& a) {
  LeDiagram l;
  l.lambda = subset_to_partition(a);
  for (auto inv : split_merge_invnc(a)) l.boxes.insert(inversion_box(a, inv));
  return l;
}

bool is_noncrossing_le(const LeDiagram& l) {
  auto in_l = [&](int row, int col) { return l.boxes.count({row, col}) > 0; };
  auto has_above = [&](int row, int col) {
    for (int x = 1; x < row; ++x)
      if (in_l(x, col)) return true;
    return false;
  };
  auto has_left = [&](int row, int col) {
    for (int y = 1; y < col; ++y)
      if (in_l(row, y)) return true;
    return false;
  };
  for (auto [row, col] : l.boxes)
    if (row < 1 || col < 1 || col > l.lambda.part(row)) return false;
  // Le condition over all boxes of the ambient partition.
  for (int row = 1; row <= l.lambda.length(); ++row)
    for (int col = 1; col <= l.lambda.part(row); ++col)
      if (!in_l(row, col) && has_above(row, col) && has_left(row, col)) return false;
  // Noncrossing condition over the boxes of L.
  for (auto [row, col] : l.boxes)
    if (has_above(row, col) && has_left(row, col)) return false;
  return true;
}

GammaNetwork gamma_network(const RSubset& a, const LeDiagram& l) {
  if (!(l.lambda == subset_to_partition(a)))
    throw std::invalid_argument("gamma_network: diagram ambient mismatch");
  GammaNetwork net;
  net.base = a;
  net.diagram = l;
  // Walks for a noncrossing diagram: enter the rightmost L-box of the row
  // horizontally, move left through the row's L-boxes, turn down once and
  // descend the column to its boundary label.  The noncrossing condition
  // rules out any further horizontal step after a descent, so the boxes
  // entered horizontally are exactly a right-justified run of the row.
  const auto comp = a.complement();
  for (int m = 1; m <= a.r(); ++m) {
    const int j = a.elem(m);
    const int row = a.r() + 1 - m;
    if (row > l.lambda.length()) continue;
    std::vector<std::pair<int, int>> horizontal;
    for (int y = l.lambda.part(row); y >= 1; --y) {
      if (!l.boxes.count({row, y})) continue;
      horizontal.push_back({row, y});
      net.paths[{comp[y - 1], j}].push_back(horizontal);
    }
  }
  return net;
}

namespace {

template <typename Value, typename BoxWeight>
std::vector<std::vector<Value>> materialize_network(const RSubset& a, const LeDiagram& l,
                                                    const BoxWeight& weight_of,
                                                    const Value& zero, const Value& one) {
  if (!is_noncrossing_le(l)) throw std::invalid_argument("network_point: diagram not noncrossing Le");
  const GammaNetwork net = gamma_network(a, l);
  const int n = a.n(), r = a.r();
  std::vector<std::vector<Value>> m(n + 1, std::vector<Value>(r + 1, zero));
  for (int t = 1; t <= r; ++t) m[a.elem(t)][t] = one;
  for (const auto& [inv, walks] : net.paths) {
    const auto [i, j] = inv;
    int col = 0;
    for (int t = 1; t <= r; ++t)
      if (a.elem(t) == j) col = t;
    Value total = zero;
    for (const auto& walk : walks) {
      Value w = one;
      for (const auto& box : walk) w = w * weight_of(box);
      total = total + w;
    }
    const int sign = ratio_sign(a, inv);
    m[i][col] = sign > 0 ? total : zero - total;
  }
  return m;
}

} // namespace

ExactMatrix network_point(const RSubset& a, const LeDiagram& l, const std::vector<Int>& weights) {
  if (weights.size() != l.boxes.size())
    throw std::invalid_argument("network_point: one weight per box required");
  std::map<std::pair<int, int>, Int> wmap;
  int idx = 0;
  for (const auto& b : l.boxes) wmap[b] = weights[idx++];
  auto grid = materialize_network<Int>(
      a, l, [&](const std::pair<int, int>& b) { return wmap.at(b); }, Int(0), Int(1));
  ExactMatrix m(a.n(), a.r());
  for (int i = 1; i <= a.n(); ++i)
    for (int j = 1; j <= a.r(); ++j) m.at(i, j) = grid[i][j];
  return m;
}

std::vector<std::vector<IntPolynomial>> network_point_symbolic(const RSubset& a,
                                                               const LeDiagram& l) {
  const VarSet vars{static_cast<int>(l.boxes.size()), 0};
  std::map<std::pair<int, int>, IntPolynomial> wmap;
  int idx = 1;
  for (const auto& b : l.boxes) wmap.emplace(b, IntPolynomial::x(vars, idx++));
  auto grid = materialize_network<IntPolynomial>(
      a, l, [&](const std::pair<int, int>& b) { return wmap.at(b); }, IntPolynomial(vars),
      IntPolynomial::constant(vars, 1));
  return grid;
}

bool totally_nonnegative(const ExactMatrix& m, int r, int n) {
  for (const auto& c : all_subsets(n, r))
    if (minor(m, c) < 0) return false;
  return true;
}

FlagProjectionReport flag_projection_pattern(const NcPermutation& w, int r) {
  FlagProjectionReport rep;
  rep.w = w;
  rep.r = r;
  const Permutation winv = w.perm().inverse();
  const RSubset a = w.act_initial(r);
  const auto inva = inversions(a);
  for (auto [i, j] : inv_nc(w)) {
    rep.positions.emplace(i, winv(j));
    const bool col_low = winv(j) <= r, row_high = winv(i) > r;
    if (col_low && row_high) {
      rep.surviving.emplace(i, j);
    } else if ((winv(i) <= r && winv(j) <= r) || (winv(i) > r && winv(j) > r)) {
      rep.kernel_coordinates.emplace_back(i, j);
    }
  }
  for (auto p : rep.surviving)
    if (!inva.count(p)) return rep; // bijectivity fails structurally
  rep.bijective_onto_invq =
      rep.kernel_coordinates.empty() && rep.surviving == split_merge_invnc(a) &&
      rep.surviving.size() == inv_nc(w).size();
  return rep;
}

} // namespace qgr
