#include "qgrass/polytopes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgrass/intmatrix.hpp"
#include "qgrass/noncrossing.hpp"

namespace qgr {

bool HPolytope::contains_indicator(const RSubset& b) const {
  if (b.n() != n || b.r() != r) return false;
  for (auto [coord, val] : fixed)
    if (static_cast<int>(b.contains(coord)) != val) return false;
  for (const auto& iq : inequalities) {
    int sum = 0;
    for (int q = iq.lo; q <= iq.hi; ++q)
      if (b.contains(q)) ++sum;
    if (iq.at_most ? sum > iq.rhs : sum < iq.rhs) return false;
  }
  return true;
}

HPolytope h_description(const RSubset& a) {
  HPolytope p;
  p.n = a.n();
  p.r = a.r();
  const int k = a.k();
  const int r = a.r();
  // (i) fixed coordinates outside the support interval [a_k, b_k].
  for (int i = 1; i < a.a(k); ++i) p.fixed.emplace_back(i, 1);
  for (int i = a.b(k) + 1; i <= a.n(); ++i) p.fixed.emplace_back(i, 0);
  // (ii) z_{a_i} + ... + z_{b_i} <= r + 1 - a_i.
  for (int i = 1; i <= k; ++i)
    p.inequalities.push_back({a.a(i), a.b(i), r + 1 - a.a(i), true, 2});
  // (iii) z_q + ... + z_{b_{i-1}} >= r - q for q in [r], a_i <= q < a_{i-1}.
  for (int i = 1; i <= k; ++i)
    for (int q = a.a(i); q < a.a(i - 1) && q <= r; ++q)
      p.inequalities.push_back({q, a.b(i - 1), r - q, false, 3});
  return p;
}

int IntervalDecomposition::e_index(int value) const {
  for (std::size_t i = 0; i < e_intervals.size(); ++i)
    if (value >= e_intervals[i].first && value <= e_intervals[i].second)
      return static_cast<int>(i) + 1;
  return 0;
}

int IntervalDecomposition::d_index(int value) const {
  for (std::size_t i = 0; i < d_intervals.size(); ++i)
    if (value >= d_intervals[i].first && value <= d_intervals[i].second)
      return static_cast<int>(i) + 1;
  return 0;
}

IntervalDecomposition interval_decomposition(const Composition& alpha, int r) {
  IntervalDecomposition dec;
  dec.r = r;
  const ZigzagParse zp = zigzag_parse(alpha);
  const int k = zp.k();
  dec.e_intervals.resize(k);
  dec.d_intervals.resize(k);
  int cursor = r - alpha.length() + 1;
  for (int i = 0; i < k; ++i) { // E_1 .. E_k, left to right
    dec.e_intervals[i] = {cursor, cursor + zp.e[i] - 1};
    cursor += zp.e[i];
  }
  for (int i = k - 1; i >= 0; --i) { // D_k .. D_1, left to right
    dec.d_intervals[i] = {cursor, cursor + zp.d[i] - 1};
    cursor += zp.d[i];
  }
  return dec;
}

bool is_admissible(const Composition& alpha, int r, const RSubset& b) {
  if (b.r() != r) throw std::invalid_argument("is_admissible: rank mismatch");
  const int m = b.k();
  if (m == 0) return true;
  const IntervalDecomposition dec = interval_decomposition(alpha, r);
  // Support constraint: min of L and max of R inside the decomposed range.
  // Pair arcs outermost first: p-th smallest missing with p-th largest new.
  for (int p = 1; p <= m; ++p) {
    const int u = b.a(m + 1 - p); // p-th smallest element of L
    const int v = b.b(m + 1 - p); // p-th largest element of R
    const int ip = dec.e_index(u);
    const int jp = dec.d_index(v);
    if (ip == 0 || jp == 0) return false;
    if (!(jp <= ip)) return false;
    if (p > 1) {
      const int prev_ip = dec.e_index(b.a(m + 2 - p));
      if (!(prev_ip < jp)) return false;
    }
  }
  return true;
}

std::vector<RSubset> admissible_sets(const Composition& alpha, int r, int n) {
  if (!alpha.fits_in_box(r, n))
    throw std::invalid_argument("admissible_sets: alpha outside Comp_{r,n}");
  std::vector<RSubset> out;
  for (const auto& b : all_subsets(n, r))
    if (is_admissible(alpha, r, b)) out.push_back(b);
  return out;
}

std::vector<RSubset> zero_one_points(const HPolytope& p) {
  std::vector<RSubset> out;
  for (const auto& b : all_subsets(p.n, p.r))
    if (p.contains_indicator(b)) out.push_back(b);
  return out;
}

std::vector<RSubset> zigzag_fixed_points(const Composition& alpha, int r, int n) {
  const ZigzagTree tree(alpha, r, n);
  const auto& taus = tree.transpositions();
  const int m = tree.internal_count();
  std::set<RSubset> seen;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    // Apply the selected transpositions right to left to [r].
    std::vector<int> vals(r);
    for (int i = 0; i < r; ++i) vals[i] = i + 1;
    for (int t = m - 1; t >= 0; --t) {
      if (!(mask & (1u << t))) continue;
      for (auto& v : vals) {
        if (v == taus[t].first) v = taus[t].second;
        else if (v == taus[t].second) v = taus[t].first;
      }
    }
    std::sort(vals.begin(), vals.end());
    seen.insert(RSubset(n, vals));
  }
  return {seen.begin(), seen.end()};
}

Permutation richardson_translation(const Composition& alpha, int r, int n) {
  const int l = alpha.length();
  std::vector<int> w(n);
  for (int i = 0; i < r - l; ++i) w[i] = i + 1;
  for (int i = 0; i < l; ++i) w[r - l + i] = r - i;
  for (int i = r; i < n; ++i) w[i] = i + 1;
  const auto [eta, nu] = ribbon_shape(alpha);
  const Permutation w_nu = grassmannian_perm(partition_to_subset(nu, r, n));
  return w_nu * Permutation(std::move(w));
}

std::vector<RSubset> richardson_fixed_points(const Composition& alpha, int r, int n) {
  const auto [eta, nu] = ribbon_shape(alpha);
  if (!eta.fits_in_box(r, n))
    throw std::invalid_argument("richardson_fixed_points: ribbon does not fit the box");
  const Permutation xinv = richardson_translation(alpha, r, n).inverse();
  std::set<RSubset> out;
  for (const auto& b : all_subsets(n, r)) {
    const Partition lb = subset_to_partition(b);
    if (lb.contains(nu) && eta.contains(lb)) out.insert(RSubset(n, xinv.act(b.elems())));
  }
  return {out.begin(), out.end()};
}

int polytope_dimension(const std::vector<RSubset>& points) {
  if (points.empty()) return -1;
  IntMatrix diffs(0, points.front().n());
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Int> row(points.front().n(), 0);
    for (int v = 1; v <= points.front().n(); ++v)
      row[v - 1] = Int(points[i].contains(v)) - Int(points.front().contains(v));
    diffs.append_row(row);
  }
  return diffs.rows() == 0 ? 0 : rank(diffs);
}

std::vector<Composition> components(int r, int n) {
  std::vector<Composition> out;
  for (const auto& alpha : compositions_in_box(r, n))
    if (alpha.size() == n - 1) out.push_back(alpha);
  return out;
}

Composition maximal_extension(const Composition& alpha, int r, int n) {
  const long long missing = (n - 1) - alpha.size();
  if (missing == 0) return alpha;
  const int k = alpha.length();
  std::vector<int> parts;
  if (k < r) {
    const int b = r - k - 1;
    const int a = static_cast<int>(n - 1 - b - alpha.size());
    if (a < 1) throw std::logic_error("maximal_extension: recipe out of range");
    parts.push_back(a);
    parts.insert(parts.end(), b, 1);
    parts.insert(parts.end(), alpha.parts().begin(), alpha.parts().end());
  } else {
    // Length already maximal: grow the first part (left steps only).
    parts = alpha.parts();
    parts[0] += static_cast<int>(missing);
  }
  return Composition(std::move(parts));
}

FacePoset face_poset(int r, int n) {
  FacePoset poset;
  poset.elements = compositions_in_box(r, n);
  const int m = static_cast<int>(poset.elements.size());
  std::vector<std::set<RSubset>> fixed(m);
  for (int i = 0; i < m; ++i) {
    const auto pts = admissible_sets(poset.elements[i], r, n);
    fixed[i] = {pts.begin(), pts.end()};
  }
  poset.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      poset.leq[i][j] = std::includes(fixed[j].begin(), fixed[j].end(), fixed[i].begin(),
                                      fixed[i].end());
  return poset;
}

std::string face_poset_dot(const FacePoset& poset) {
  std::ostringstream os;
  os << "digraph faces {\n  rankdir=BT;\n";
  const int m = static_cast<int>(poset.elements.size());
  for (int i = 0; i < m; ++i)
    os << "  n" << i << " [label=\"" << poset.elements[i].to_string() << "\"];\n";
  // Cover relations only: i < j with nothing in between.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !poset.leq[i][j] || poset.leq[j][i]) continue;
      bool cover = true;
      for (int t = 0; t < m && cover; ++t)
        if (t != i && t != j && poset.leq[i][t] && poset.leq[t][j] && !poset.leq[t][i] &&
            !poset.leq[j][t])
          cover = false;
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace qgr
