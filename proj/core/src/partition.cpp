#include "qgrass/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts not weakly decreasing");
  }
}

long long Partition::size() const {
  long long s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

bool Partition::fits_in_box(int r, int n) const {
  return length() <= r && (parts_.empty() || parts_[0] <= n - r);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int col = 1; col <= parts_[0]; ++col)
    conj[col - 1] = static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [col](int p) { return p >= col; }));
  return Partition(std::move(conj));
}

FrobeniusSymbol Partition::frobenius() const {
  FrobeniusSymbol f;
  const Partition conj = conjugate();
  for (int i = 1; i <= length() && part(i) >= i; ++i) {
    f.arms.push_back(part(i) - i);
    f.legs.push_back(conj.part(i) - i);
  }
  return f;
}

Partition Partition::from_frobenius(const FrobeniusSymbol& f) {
  if (f.arms.size() != f.legs.size())
    throw std::invalid_argument("from_frobenius: row length mismatch");
  const int k = static_cast<int>(f.arms.size());
  if (k == 0) return {};
  const int rows = f.legs[0] + 1;
  std::vector<int> parts(rows, 0);
  for (int i = 1; i <= k; ++i) parts[i - 1] = f.arms[i - 1] + i;
  // Rows below the diagonal block are recovered from the legs (conjugate).
  for (int i = k + 1; i <= rows; ++i) {
    int cnt = 0;
    for (int j = 1; j <= k; ++j)
      if (f.legs[j - 1] + j >= i) ++cnt;
    parts[i - 1] = cnt;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

int ohl(const Partition& lambda) {
  if (lambda.empty()) return 0;
  return lambda.part(1) + lambda.length() - 1;
}

std::vector<Partition> partitions_in_box(int r, int n) {
  if (r < 0 || n < r) throw std::invalid_argument("partitions_in_box: need 0 <= r <= n");
  std::vector<Partition> out;
  for (int m = 0; m <= r * (n - r); ++m) {
    auto layer = partitions_of(m, r, n - r);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Partition> partitions_of(int m, int max_len, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int bound) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rem, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  if (m >= 0) rec(m, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace qgr
