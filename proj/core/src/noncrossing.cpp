#include "qgrass/noncrossing.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qgr {

namespace {

Permutation blocks_to_perm(int n, const std::vector<std::vector<int>>& blocks) {
  Permutation w = Permutation::identity(n);
  for (const auto& block : blocks) w = w * Permutation::backwards_cycle(n, block);
  return w;
}

void sort_blocks(std::vector<std::vector<int>>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

} // namespace

bool is_noncrossing_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(n + 1, -1);
  int covered = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (blocks[bi].empty()) return false;
    for (int v : blocks[bi]) {
      if (v < 1 || v > n || owner[v] != -1) return false;
      owner[v] = static_cast<int>(bi);
      ++covered;
    }
  }
  if (covered != n) return false;
  // Scan [1..n] keeping a stack of open blocks: every element must either
  // open a block or extend the innermost open one.
  std::vector<int> block_min(blocks.size()), block_max(blocks.size());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    block_min[bi] = *std::min_element(blocks[bi].begin(), blocks[bi].end());
    block_max[bi] = *std::max_element(blocks[bi].begin(), blocks[bi].end());
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v) {
    const int bi = owner[v];
    if (v == block_min[bi])
      stack.push_back(bi);
    else if (stack.empty() || stack.back() != bi)
      return false;
    if (v == block_max[bi]) stack.pop_back();
  }
  return true;
}

NcPermutation NcPermutation::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  sort_blocks(blocks);
  if (!is_noncrossing_blocks(n, blocks))
    throw std::invalid_argument("NcPermutation: blocks are not a noncrossing partition of [1..n]");
  NcPermutation w;
  w.perm_ = blocks_to_perm(n, blocks);
  w.blocks_ = std::move(blocks);
  return w;
}

std::optional<NcPermutation> NcPermutation::from_permutation(const Permutation& w) {
  auto blocks = w.cycle_blocks();
  if (!is_noncrossing_blocks(w.n(), blocks)) return std::nullopt;
  if (blocks_to_perm(w.n(), blocks) != w) return std::nullopt;
  NcPermutation out;
  out.perm_ = w;
  out.blocks_ = std::move(blocks);
  return out;
}

int NcPermutation::block_of(int v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v))
      return static_cast<int>(i);
  throw std::out_of_range("NcPermutation::block_of: value outside [1..n]");
}

RSubset NcPermutation::act_initial(int r) const {
  std::vector<int> vals(r);
  std::iota(vals.begin(), vals.end(), 1);
  return RSubset(n(), perm_.act(vals));
}

int nc_enumeration_bound() {
  if (const char* env = std::getenv("QGRASS_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

namespace {

// All noncrossing partitions of the sorted ground set S: pick the block of
// min(S); the rest of S splits into independent segments between the chosen
// elements, each partitioned recursively.  Emits via continuation so the
// segment product needs no intermediate copies.
void nc_rec(const std::vector<int>& S, std::vector<std::vector<int>>& current,
            const std::function<void()>& emit) {
  if (S.empty()) {
    emit();
    return;
  }
  const int s = static_cast<int>(S.size());
  for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
    std::vector<int> block{S[0]};
    for (int i = 1; i < s; ++i)
      if (mask & (1u << (i - 1))) block.push_back(S[i]);
    std::vector<std::vector<int>> segments;
    std::size_t bpos = 1;
    std::vector<int> seg;
    for (int i = 1; i < s; ++i) {
      if (bpos < block.size() && S[i] == block[bpos]) {
        segments.push_back(std::move(seg));
        seg.clear();
        ++bpos;
      } else {
        seg.push_back(S[i]);
      }
    }
    segments.push_back(std::move(seg));

    current.push_back(std::move(block));
    std::function<void(std::size_t)> chain = [&](std::size_t si) {
      if (si == segments.size()) {
        emit();
        return;
      }
      nc_rec(segments[si], current, [&, si] { chain(si + 1); });
    };
    chain(0);
    current.pop_back();
  }
}

} // namespace

std::vector<NcPermutation> enumerate_nc(int n) {
  if (n < 1 || n > nc_enumeration_bound())
    throw std::invalid_argument("enumerate_nc: n outside [1, bound]; raise QGRASS_MAX_N to override");
  std::vector<int> S(n);
  std::iota(S.begin(), S.end(), 1);
  std::vector<NcPermutation> out;
  std::vector<std::vector<int>> cur;
  nc_rec(S, cur, [&] { out.push_back(NcPermutation::from_blocks(n, cur)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> nc_descents(const NcPermutation& w) {
  std::set<int> out;
  const Permutation& p = w.perm();
  for (int k : p.descents())
    if (k == p(k) || k == p(k + 1)) out.insert(k);
  return out;
}

std::set<int> nc_descents_definitional(const NcPermutation& w) {
  std::set<int> out;
  const Permutation& p = w.perm();
  for (int k : p.descents())
    if (NcPermutation::from_permutation(p.times_s(k)).has_value()) out.insert(k);
  return out;
}

NcPermutation z_of(const RSubset& A) {
  const int n = A.n();
  const int k = A.k();
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    std::vector<int> block{A.a(i)};
    for (int v = A.b(i - 1) + 1; v <= A.b(i); ++v) block.push_back(v);
    for (int v : block) used[v] = true;
    blocks.push_back(std::move(block));
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) blocks.push_back({v});
  return NcPermutation::from_blocks(n, std::move(blocks));
}

std::vector<NcPermutation> fiber(const RSubset& A) {
  std::vector<NcPermutation> out;
  for (auto& w : enumerate_nc(A.n()))
    if (w.act_initial(A.r()) == A) out.push_back(w);
  return out;
}

std::set<std::pair<int, int>> inv_nc(const NcPermutation& w) {
  std::set<std::pair<int, int>> out;
  const Permutation& p = w.perm();
  const Permutation pinv = p.inverse();
  for (const auto& block : w.blocks()) {
    const int j = block.back();
    // Case 1: i in the same cycle as j.
    for (int i : block)
      if (i < j) out.emplace(i, j);
    // Case 2: the maximal i with i < j < w^{-1}(i).
    for (int i = j - 1; i >= 1; --i) {
      if (pinv(i) > j) {
        out.emplace(i, j);
        break;
      }
    }
  }
  return out;
}

std::set<std::pair<int, int>> inv_nc_definitional(const NcPermutation& w) {
  std::set<std::pair<int, int>> out;
  for (auto [i, j] : w.perm().inversions()) {
    const Permutation tw = Permutation::transposition(w.n(), i, j) * w.perm();
    if (NcPermutation::from_permutation(tw).has_value()) out.emplace(i, j);
  }
  return out;
}

std::set<std::pair<int, int>> split_merge_invnc(const RSubset& A) {
  std::set<std::pair<int, int>> out;
  const int k = A.k();
  // Split: (a_p, b_p), and (q, b_p) for b_{p-1} < q < b_p.
  for (int p = 1; p <= k; ++p) {
    out.emplace(A.a(p), A.b(p));
    for (int q = A.b(p - 1) + 1; q < A.b(p); ++q) out.emplace(q, A.b(p));
  }
  // Merge: (a_{p+1}, b_p) for 1 <= p <= k-1, and (a_{p+1}, q) for
  // a_{p+1} < q < a_p, 0 <= p <= k-1.
  for (int p = 1; p <= k - 1; ++p) out.emplace(A.a(p + 1), A.b(p));
  for (int p = 0; p <= k - 1; ++p)
    for (int q = A.a(p + 1) + 1; q < A.a(p); ++q) out.emplace(A.a(p + 1), q);
  return out;
}

Composition comp_of(const NcPermutation& w, int r) {
  const auto des = nc_descents(w);
  for (int d : des)
    if (d != r) throw std::invalid_argument("comp_of: not an r-quasigrassmannian permutation");
  const RSubset A = w.act_initial(r);
  const int k = A.k();
  if (k == 0) return Composition{};
  const int ak = A.a(k);
  std::vector<int> parts;
  for (int idx = ak; idx <= r; ++idx) {
    const auto& block = w.blocks()[w.block_of(idx)];
    if (block.front() != idx)
      throw std::logic_error("comp_of: block minima do not cover [a_k, r]");
    parts.push_back(idx == ak ? static_cast<int>(block.size()) - 1
                              : static_cast<int>(block.size()));
  }
  return Composition(std::move(parts));
}

RSubset subset_of_qgrass(const NcPermutation& w, int r) { return w.act_initial(r); }

std::vector<NcPermutation> kreweras_covers(const NcPermutation& u) {
  std::vector<NcPermutation> out;
  const auto& blocks = u.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<std::vector<int>> merged;
      merged.reserve(blocks.size() - 1);
      std::vector<int> joint = blocks[i];
      joint.insert(joint.end(), blocks[j].begin(), blocks[j].end());
      std::sort(joint.begin(), joint.end());
      merged.push_back(std::move(joint));
      for (std::size_t t = 0; t < blocks.size(); ++t)
        if (t != i && t != j) merged.push_back(blocks[t]);
      if (is_noncrossing_blocks(u.n(), merged))
        out.push_back(NcPermutation::from_blocks(u.n(), std::move(merged)));
    }
  std::sort(out.begin(), out.end());
  return out;
}

ZigzagTree::ZigzagTree(const Composition& alpha, int r, int n)
    : alpha_(alpha), r_(r), n_(n) {
  if (!alpha.fits_in_box(r, n))
    throw std::invalid_argument("ZigzagTree: alpha outside Comp_{r,n}");
  m_ = static_cast<int>(alpha.size());
  lo_ = r - alpha.length() + 1;
  hi_ = lo_ + m_;
  const auto des = alpha.descents();
  right_step_.assign(std::max(0, m_ - 1), false);
  for (int t = 1; t <= m_ - 1; ++t) right_step_[t - 1] = des.count(t) > 0;

  int x = lo_, y = hi_;
  for (int t = 1; t <= m_; ++t) {
    if (t == m_) {
      taus_.emplace_back(x, y);
    } else if (right_step_[t - 1]) {
      taus_.emplace_back(x, y);
      ++x;
    } else {
      taus_.emplace_back(y - 1, y);
      --y;
    }
  }
}

NcPermutation ZigzagTree::to_noncrossing() const {
  const int n = n_;
  if (m_ == 0) {
    std::vector<std::vector<int>> singletons;
    for (int v = 1; v <= n; ++v) singletons.push_back({v});
    return NcPermutation::from_blocks(n, std::move(singletons));
  }
  // Union-find over internal nodes 0..m-1 and leaves m..m+m (by position).
  // Edges from each internal node to its two children; the left edge is
  // deleted when the node is a right child.
  const int total = 2 * m_ + 1;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Leaf ids: internal node t (1-based) owns one leaf unless terminal.
  std::vector<int> leaf_value(total, 0);
  int x = lo_, y = hi_;
  int next_leaf = m_;
  for (int t = 1; t <= m_; ++t) {
    const bool is_right_child = t > 1 && right_step_[t - 2];
    if (t == m_) {
      const int left_leaf = next_leaf++, right_leaf = next_leaf++;
      leaf_value[left_leaf] = x;
      leaf_value[right_leaf] = y;
      if (!is_right_child) unite(left_leaf, t - 1);
      unite(right_leaf, t - 1);
    } else if (right_step_[t - 1]) {
      // Path child on the right; own leaf x on the left.
      const int leaf = next_leaf++;
      leaf_value[leaf] = x;
      if (!is_right_child) unite(leaf, t - 1);
      unite(t, t - 1); // right-child path edge always survives
      ++x;
    } else {
      // Path child on the left; own leaf y on the right.
      const int leaf = next_leaf++;
      leaf_value[leaf] = y;
      unite(leaf, t - 1);
      if (!is_right_child) unite(t, t - 1);
      --y;
    }
  }

  std::vector<std::vector<int>> groups(total);
  for (int id = m_; id < next_leaf; ++id) groups[find(id)].push_back(leaf_value[id]);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  for (int v = 1; v < lo_; ++v) blocks.push_back({v});
  for (int v = hi_ + 1; v <= n; ++v) blocks.push_back({v});
  return NcPermutation::from_blocks(n, std::move(blocks));
}

} // namespace qgr
