#include "qgrass/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace qgr {

Permutation::Permutation(std::vector<int> oneline) : word_(std::move(oneline)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > n() || seen[v - 1])
      throw std::invalid_argument("Permutation: one-line word is not a bijection on [1..n]");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::backwards_cycle(int n, const std::vector<int>& block) {
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  const int s = static_cast<int>(sorted.size());
  for (int j = 1; j < s; ++j) w[sorted[j] - 1] = sorted[j - 1];
  if (s > 0) w[sorted[0] - 1] = sorted[s - 1];
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int i, int j) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 1; i <= n(); ++i) w[word_[i - 1] - 1] = i;
  return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("Permutation product: size mismatch");
  std::vector<int> w(word_.size());
  for (int i = 1; i <= n(); ++i) w[i - 1] = word_[rhs(i) - 1];
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (word_[i - 1] != i) return false;
  return true;
}

std::set<std::pair<int, int>> Permutation::inversions() const {
  const Permutation inv = inverse();
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if (inv(i) > inv(j)) out.emplace(i, j);
  return out;
}

long long Permutation::length() const {
  long long len = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if (word_[i - 1] > word_[j - 1]) ++len;
  return len;
}

std::set<int> Permutation::descents() const {
  std::set<int> out;
  for (int i = 1; i < n(); ++i)
    if (word_[i - 1] > word_[i]) out.insert(i);
  return out;
}

Permutation Permutation::times_s(int k) const {
  if (k < 1 || k >= n()) throw std::invalid_argument("times_s: k out of range");
  std::vector<int> w = word_;
  std::swap(w[k - 1], w[k]);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::act(const std::vector<int>& values) const {
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) out.push_back(word_[v - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> Permutation::cycle_blocks() const {
  std::vector<bool> seen(word_.size(), false);
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      cyc.push_back(j);
      j = word_[j - 1];
    }
    std::sort(cyc.begin(), cyc.end());
    blocks.push_back(std::move(cyc));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  const bool wide = n() > 9;
  for (int i = 0; i < n(); ++i) {
    if (wide && i) os << ' ';
    os << word_[i];
  }
  return os.str();
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = u.n();
  std::vector<int> pu, pv;
  pu.reserve(n);
  pv.reserve(n);
  for (int i = 1; i <= n; ++i) {
    pu.push_back(u(i));
    pv.push_back(v(i));
    std::vector<int> su = pu, sv = pv;
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    for (std::size_t k = 0; k < su.size(); ++k)
      if (su[k] > sv[k]) return false;
  }
  return true;
}

Permutation longest_element(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

} // namespace qgr
