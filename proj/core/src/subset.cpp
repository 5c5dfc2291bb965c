#include "qgrass/subset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgr {

RSubset::RSubset(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (n_ < 0) throw std::invalid_argument("RSubset: n must be nonnegative");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > n_)
      throw std::invalid_argument("RSubset: element out of [1, n]");
    if (i > 0 && elems_[i - 1] >= elems_[i])
      throw std::invalid_argument("RSubset: elements must be strictly increasing");
  }
}

RSubset RSubset::initial(int n, int r) {
  std::vector<int> e(r);
  for (int i = 0; i < r; ++i) e[i] = i + 1;
  return RSubset(n, std::move(e));
}

RSubset RSubset::top(int n, int r) {
  std::vector<int> e(r);
  for (int i = 0; i < r; ++i) e[i] = n - r + i + 1;
  return RSubset(n, std::move(e));
}

bool RSubset::contains(int v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

int RSubset::k() const {
  int cnt = 0;
  for (int v : elems_)
    if (v > r()) ++cnt;
  return cnt;
}

int RSubset::a(int i) const {
  if (i == 0) return r() + 1;
  // L = [r] \ A sorted decreasingly; a_1 is the largest missing value.
  int seen = 0;
  for (int v = r(); v >= 1; --v) {
    if (!contains(v)) {
      if (++seen == i) return v;
    }
  }
  throw std::out_of_range("RSubset::a: index exceeds k");
}

int RSubset::b(int i) const {
  if (i == 0) return r();
  int seen = 0;
  for (int v = r() + 1; v <= n_; ++v) {
    if (contains(v)) {
      if (++seen == i) return v;
    }
  }
  throw std::out_of_range("RSubset::b: index exceeds k");
}

std::vector<int> RSubset::complement() const {
  std::vector<int> out;
  out.reserve(n_ - r());
  for (int v = 1; v <= n_; ++v)
    if (!contains(v)) out.push_back(v);
  return out;
}

RSubset RSubset::swap(int i, int j) const {
  if (!contains(j) || contains(i)) throw std::invalid_argument("RSubset::swap: need j in A, i not in A");
  std::vector<int> e;
  e.reserve(elems_.size());
  for (int v : elems_)
    if (v != j) e.push_back(v);
  e.insert(std::upper_bound(e.begin(), e.end(), i), i);
  return RSubset(n_, std::move(e));
}

std::string RSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

std::set<std::pair<int, int>> inversions(const RSubset& A) {
  std::set<std::pair<int, int>> out;
  for (int j : A.elems())
    for (int i = 1; i < j; ++i)
      if (!A.contains(i)) out.emplace(i, j);
  return out;
}

std::set<std::pair<int, int>> inversions_closed_form(const RSubset& A) {
  std::set<std::pair<int, int>> out;
  const int k = A.k();
  for (int p = 1; p <= k; ++p) {
    const int bp = A.b(p);
    for (int i = 1; i < bp; ++i)
      if (!A.contains(i)) out.emplace(i, bp);
  }
  for (int p = 1; p <= k; ++p) {
    const int ap = A.a(p);
    for (int j = ap + 1; j <= A.r(); ++j)
      if (A.contains(j)) out.emplace(ap, j);
  }
  return out;
}

bool gale_leq(const RSubset& A, const RSubset& B) {
  if (A.n() != B.n() || A.r() != B.r())
    throw std::invalid_argument("gale_leq: mismatched (r, n)");
  int ca = 0, cb = 0;
  std::size_t ia = 0, ib = 0;
  for (int v = 1; v <= A.n(); ++v) {
    if (ia < A.elems().size() && A.elems()[ia] == v) ++ca, ++ia;
    if (ib < B.elems().size() && B.elems()[ib] == v) ++cb, ++ib;
    if (ca < cb) return false;
  }
  return true;
}

Partition subset_to_partition(const RSubset& A) {
  const int r = A.r();
  std::vector<int> parts(r, 0);
  for (int m = 1; m <= r; ++m) parts[r - m] = A.elem(m) - m;
  return Partition(std::move(parts));
}

RSubset partition_to_subset(const Partition& lambda, int r, int n) {
  if (!lambda.fits_in_box(r, n))
    throw std::invalid_argument("partition_to_subset: lambda does not fit the r x (n-r) box");
  std::vector<int> e(r);
  for (int m = 1; m <= r; ++m) e[m - 1] = lambda.part(r + 1 - m) + m;
  return RSubset(n, std::move(e));
}

Permutation grassmannian_perm(const RSubset& A) {
  std::vector<int> w = A.elems();
  const auto comp = A.complement();
  w.insert(w.end(), comp.begin(), comp.end());
  return Permutation(std::move(w));
}

Partition rim_hook_remove(const Partition& lambda, std::pair<int, int> inv, int r, int n) {
  const RSubset A = partition_to_subset(lambda, r, n);
  if (!inversions(A).count(inv))
    throw std::invalid_argument("rim_hook_remove: not an inversion of the subset");
  return subset_to_partition(A.swap(inv.first, inv.second));
}

std::vector<std::pair<int, int>> skew_boxes(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) throw std::invalid_argument("skew_boxes: mu not contained in lambda");
  std::vector<std::pair<int, int>> out;
  for (int row = 1; row <= lambda.length(); ++row)
    for (int col = mu.part(row) + 1; col <= lambda.part(row); ++col)
      out.emplace_back(row, col);
  return out;
}

bool is_rim_hook(const Partition& lambda, const Partition& mu) {
  const auto boxes = skew_boxes(lambda, mu);
  if (boxes.empty()) return false;
  std::set<std::pair<int, int>> cells(boxes.begin(), boxes.end());
  // In a skew shape a diagonal pair forces the whole 2 x 2 square.
  for (auto [row, col] : cells)
    if (cells.count({row + 1, col + 1})) return false;
  // Connectivity via edge adjacency.
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> stack{boxes.front()};
  while (!stack.empty()) {
    auto [row, col] = stack.back();
    stack.pop_back();
    if (!seen.insert({row, col}).second) continue;
    for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
      if (cells.count({row + dr, col + dc})) stack.push_back({row + dr, col + dc});
  }
  return seen.size() == cells.size();
}

std::pair<int, int> inversion_box(const RSubset& A, std::pair<int, int> inv) {
  const auto [i, j] = inv;
  if (A.contains(i) || !A.contains(j) || i >= j)
    throw std::invalid_argument("inversion_box: not an inversion");
  // Row of north step j: rows from the top are indexed by A sorted decreasingly.
  int m = 0;
  for (int t = 1; t <= A.r(); ++t)
    if (A.elem(t) == j) m = t;
  const int row = A.r() + 1 - m;
  // Column of east step i: complement sorted increasingly, left to right.
  int col = 0;
  for (int v = 1; v <= i; ++v)
    if (!A.contains(v)) ++col;
  return {row, col};
}

std::pair<int, int> box_inversion(const RSubset& A, int row, int col) {
  const int j = A.elem(A.r() + 1 - row);
  const auto comp = A.complement();
  if (col < 1 || col > static_cast<int>(comp.size()))
    throw std::invalid_argument("box_inversion: column out of range");
  return {comp[col - 1], j};
}

std::vector<RSubset> all_subsets(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("all_subsets: need 0 <= r <= n");
  std::vector<RSubset> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.emplace_back(n, cur);
      return;
    }
    const int need = r - static_cast<int>(cur.size());
    for (int v = next; v + need - 1 <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

} // namespace qgr
