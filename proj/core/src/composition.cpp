#include "qgrass/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgr {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
}

long long Composition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::set<int> Composition::descents() const {
  std::set<int> out;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    out.insert(acc);
  }
  return out;
}

bool Composition::fits_in_box(int r, int n) const {
  if (empty()) return true;
  return length() <= r && size() - length() + 1 <= n - r;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Composition composition_from_descents(int m, const std::set<int>& des) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : des) {
    if (d <= prev || d >= m) throw std::invalid_argument("composition_from_descents: bad descent");
    parts.push_back(d - prev);
    prev = d;
  }
  if (m > 0) parts.push_back(m - prev);
  return Composition(std::move(parts));
}

bool refines(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) return false;
  const auto db = beta.descents();
  for (int d : alpha.descents())
    if (!db.count(d)) return false;
  return true;
}

std::vector<Composition> compositions_of(int m, int max_len) {
  std::vector<Composition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (max_len <= 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_in_box(int r, int n) {
  std::vector<Composition> out;
  for (int m = 0; m <= n - 1; ++m)
    for (auto& alpha : compositions_of(m, r))
      if (alpha.fits_in_box(r, n)) out.push_back(alpha);
  return out;
}

ZigzagParse zigzag_parse(const Composition& alpha) {
  ZigzagParse p;
  const auto& a = alpha.parts();
  std::size_t i = 0;
  bool first = true;
  while (i < a.size()) {
    int d = first ? a[i] : a[i] - 1;
    first = false;
    if (d < 1) throw std::logic_error("zigzag_parse: internal parse failure");
    ++i;
    int e = 1;
    while (i < a.size() && a[i] == 1) {
      ++e;
      ++i;
    }
    p.d.push_back(d);
    p.e.push_back(e);
  }
  return p;
}

Composition zigzag_unparse(const ZigzagParse& p) {
  std::vector<int> parts;
  for (int i = 0; i < p.k(); ++i) {
    parts.push_back(i == 0 ? p.d[i] : p.d[i] + 1);
    for (int j = 1; j < p.e[i]; ++j) parts.push_back(1);
  }
  return Composition(std::move(parts));
}

namespace {
// Arms/legs rows of the Frobenius symbol from the zigzag parse: suffix sums
// of d (resp. e), each minus one.
std::vector<int> suffix_sums_minus_one(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  int acc = 0;
  for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j) {
    acc += v[j];
    out[j] = acc - 1;
  }
  return out;
}
} // namespace

Partition comp_to_partition(const Composition& alpha) {
  if (alpha.empty()) return {};
  const ZigzagParse p = zigzag_parse(alpha);
  FrobeniusSymbol f;
  f.arms = suffix_sums_minus_one(p.d);
  f.legs = suffix_sums_minus_one(p.e);
  return Partition::from_frobenius(f);
}

Composition partition_to_comp(const Partition& lambda) {
  if (lambda.empty()) return {};
  const FrobeniusSymbol f = lambda.frobenius();
  const int k = static_cast<int>(f.arms.size());
  ZigzagParse p;
  p.d.resize(k);
  p.e.resize(k);
  for (int j = 0; j < k; ++j) {
    p.d[j] = (j + 1 < k) ? f.arms[j] - f.arms[j + 1] : f.arms[k - 1] + 1;
    p.e[j] = (j + 1 < k) ? f.legs[j] - f.legs[j + 1] : f.legs[k - 1] + 1;
  }
  return zigzag_unparse(p);
}

FrobeniusSymbol printed_frobenius_of_comp(const Composition& alpha) {
  const ZigzagParse p = zigzag_parse(alpha);
  FrobeniusSymbol f;
  f.arms = suffix_sums_minus_one(p.d);
  f.legs = suffix_sums_minus_one(p.e);
  if (p.k() >= 2) {
    // Verbatim second leg entry: (sum_{i=2}^{k} d_i) - 1.
    int acc = 0;
    for (int j = 1; j < p.k(); ++j) acc += p.d[j];
    f.legs[1] = acc - 1;
  }
  return f;
}

std::pair<Partition, Partition> ribbon_shape(const Composition& alpha) {
  const int l = alpha.length();
  if (l == 0) return {Partition{}, Partition{}};
  std::vector<int> eta(l, 0), nu(l, 0);
  eta[l - 1] = alpha.parts()[l - 1];
  nu[l - 1] = 0;
  for (int i = l - 2; i >= 0; --i) {
    nu[i] = eta[i + 1] - 1;
    eta[i] = nu[i] + alpha.parts()[i];
  }
  return {Partition(std::move(eta)), Partition(std::move(nu))};
}

} // namespace qgr
