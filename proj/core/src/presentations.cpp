#include "qgrass/presentations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgrass/composition.hpp"
#include "qgrass/intmatrix.hpp"
#include "qgrass/partition.hpp"
#include "qgrass/qsym.hpp"

namespace qgr {

std::vector<long long> betti_by_ohl(int r, int n) {
  std::vector<long long> out;
  for (const auto& lam : partitions_in_box(r, n)) {
    const int k = ohl(lam);
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1, 0);
    ++out[k];
  }
  return out;
}

namespace {

long long binom_verbatim(long long m, long long j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (m < 0) return 0;
  if (j > m) return 0;
  long long acc = 1;
  for (long long i = 1; i <= j; ++i) acc = acc * (m - i + 1) / i;
  return acc;
}

} // namespace

long long betti_closed_formula(int r, int n, int k) {
  long long total = 0;
  for (int a = 1; a <= r; ++a) {
    const int b = k + 1 - a;
    if (b < 0 || b > n - 1) continue;
    total += binom_verbatim(k - 2, a - 1);
  }
  return total;
}

bool GradedRanks::all_torsion_free() const {
  return std::all_of(torsion_free.begin(), torsion_free.end(), [](bool b) { return b; });
}

namespace {

// Coefficient of a monomial in the product f * g, by sub-exponent
// convolution; avoids forming the product polynomial.
Int product_coeff(const IntPolynomial& f, const IntPolynomial& g, const std::vector<int>& target) {
  Int total = 0;
  const int nv = static_cast<int>(target.size());
  std::vector<int> sub(nv, 0), rest(nv, 0);
  while (true) {
    const Int cf = f.coeff(sub);
    if (cf != 0) {
      for (int k = 0; k < nv; ++k) rest[k] = target[k] - sub[k];
      const Int cg = g.coeff(rest);
      if (cg != 0) total += cf * cg;
    }
    int pos = 0;
    while (pos < nv && sub[pos] == target[pos]) sub[pos++] = 0;
    if (pos == nv) break;
    ++sub[pos];
  }
  return total;
}

class FundamentalCache {
public:
  explicit FundamentalCache(int r) : r_(r) {}
  const IntPolynomial& get(const Composition& alpha) {
    auto it = cache_.find(alpha);
    if (it == cache_.end()) it = cache_.emplace(alpha, fundamental(alpha, r_)).first;
    return it->second;
  }

private:
  int r_;
  std::map<Composition, IntPolynomial> cache_;
};

std::vector<int> lead_exponent(const Composition& alpha, int nvars) {
  std::vector<int> e(nvars, 0);
  for (int k = 0; k < alpha.length(); ++k) e[k] = alpha.parts()[k];
  return e;
}

std::vector<Composition> ideal_generators(int r, int n, int g) {
  std::vector<Composition> out;
  for (const auto& gamma : compositions_of(g, r))
    if (!gamma.fits_in_box(r, n)) out.push_back(gamma);
  return out;
}

// Degree-d piece of <F_gamma : gamma outside Comp_{r,n}> in QSym_r, in the
// monomial-basis coordinates indexed by Comp(d, length <= r).  With
// generators_only, multipliers are restricted to the constant 1, i.e. rows
// are the degree-d generators themselves.
IntMatrix qsym_ideal_piece(int r, int n, int d, FundamentalCache& fc, bool generators_only) {
  const auto cols = compositions_of(d, r);
  std::vector<std::vector<int>> targets;
  targets.reserve(cols.size());
  for (const auto& c : cols) targets.push_back(lead_exponent(c, r));
  std::vector<std::vector<Int>> rows;
  for (int g = 1; g <= d; ++g) {
    if (generators_only && g != d) continue;
    for (const auto& gamma : ideal_generators(r, n, g)) {
      const IntPolynomial& fg = fc.get(gamma);
      if (fg.is_zero()) continue;
      for (const auto& beta : compositions_of(d - g, r)) {
        if (generators_only && !beta.empty()) continue;
        const IntPolynomial& fb = fc.get(beta);
        std::vector<Int> row(cols.size());
        bool nonzero = false;
        for (std::size_t t = 0; t < targets.size(); ++t) {
          row[t] = product_coeff(fb, fg, targets[t]);
          nonzero = nonzero || row[t] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  IntMatrix m(0, static_cast<int>(cols.size()));
  for (auto& row : rows) m.append_row(row);
  return m;
}

bool piece_torsion_free(const IntMatrix& piece) {
  const auto divisors = snf_diagonal(hnf(piece));
  return std::all_of(divisors.begin(), divisors.end(), [](const Int& v) { return v == 1; });
}

} // namespace

GradedRanks qsym_quotient_betti(int r, int n, int degree_bound) {
  FundamentalCache fc(r);
  GradedRanks out;
  for (int d = 0; d <= degree_bound; ++d) {
    const long long ambient = static_cast<long long>(compositions_of(d, r).size());
    const IntMatrix piece = qsym_ideal_piece(r, n, d, fc, false);
    out.ranks.push_back(ambient - rank(piece));
    out.torsion_free.push_back(piece.rows() == 0 || piece_torsion_free(piece));
  }
  return out;
}

bool ideal_free_basis_check(int r, int n, int degree_bound) {
  FundamentalCache fc(r);
  for (int d = 0; d <= degree_bound; ++d) {
    const IntMatrix full = qsym_ideal_piece(r, n, d, fc, false);
    const IntMatrix gens = qsym_ideal_piece(r, n, d, fc, true);
    if (full.rows() == 0 && gens.rows() == 0) continue;
    if (!same_row_lattice(full, gens)) return false;
  }
  return true;
}

namespace {

// Column data of the tensor ring in degree d: pairs (alpha, beta) with the
// corresponding leading exponent vectors over n variables.
struct TensorBasis {
  std::vector<std::pair<Composition, Composition>> pairs;
  std::vector<std::vector<int>> targets;
};

TensorBasis tensor_basis(int r, int n, int d) {
  TensorBasis tb;
  for (int d1 = 0; d1 <= d; ++d1)
    for (const auto& alpha : compositions_of(d1, r))
      for (const auto& beta : compositions_of(d - d1, n - r)) {
        std::vector<int> e(n, 0);
        for (int k = 0; k < alpha.length(); ++k) e[k] = alpha.parts()[k];
        for (int k = 0; k < beta.length(); ++k) e[r + k] = beta.parts()[k];
        tb.pairs.emplace_back(alpha, beta);
        tb.targets.push_back(std::move(e));
      }
  return tb;
}

// Coefficient of an n-variable monomial in F_alpha(x_1..x_r) *
// F_beta(x_{r+1}..x_n) * F_gamma(x_1..x_n): convolve over the F_gamma
// sub-exponent, then split the remainder across the two windows.
Int triple_coeff(const IntPolynomial& fa, const IntPolynomial& fb, const IntPolynomial& fg,
                 const std::vector<int>& target, int r) {
  const int n = static_cast<int>(target.size());
  Int total = 0;
  std::vector<int> sub(n, 0), low(r), high(n - r);
  while (true) {
    const Int cg = fg.coeff(sub);
    if (cg != 0) {
      for (int k = 0; k < r; ++k) low[k] = target[k] - sub[k];
      for (int k = r; k < n; ++k) high[k - r] = target[k] - sub[k];
      const Int ca = fa.coeff(low);
      if (ca != 0) {
        const Int cb = fb.coeff(high);
        if (cb != 0) total += cg * ca * cb;
      }
    }
    int pos = 0;
    while (pos < n && sub[pos] == target[pos]) sub[pos++] = 0;
    if (pos == n) break;
    ++sub[pos];
  }
  return total;
}

} // namespace

GradedRanks tensor_presentation_betti(int r, int n, int degree_bound) {
  FundamentalCache fc_r(r), fc_nr(n - r), fc_n(n);
  GradedRanks out;
  for (int d = 0; d <= degree_bound; ++d) {
    const TensorBasis tb = tensor_basis(r, n, d);
    std::vector<std::vector<Int>> rows;
    for (int g = 1; g <= d; ++g) {
      const TensorBasis mult = tensor_basis(r, n, d - g);
      for (const auto& gamma : compositions_of(g, n)) {
        const IntPolynomial& fg = fc_n.get(gamma);
        for (const auto& [alpha, beta] : mult.pairs) {
          const IntPolynomial& fa = fc_r.get(alpha);
          const IntPolynomial& fb = fc_nr.get(beta);
          std::vector<Int> row(tb.pairs.size());
          bool nonzero = false;
          for (std::size_t t = 0; t < tb.targets.size(); ++t) {
            row[t] = triple_coeff(fa, fb, fg, tb.targets[t], r);
            nonzero = nonzero || row[t] != 0;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    IntMatrix piece(0, static_cast<int>(tb.pairs.size()));
    for (auto& row : rows) piece.append_row(row);
    out.ranks.push_back(static_cast<long long>(tb.pairs.size()) - rank(piece));
    out.torsion_free.push_back(piece.rows() == 0 || piece_torsion_free(piece));
  }
  return out;
}

std::string betti_csv(const std::vector<std::pair<int, int>>& grid, int degree_bound_offset) {
  std::ostringstream os;
  os << "r,n,degree,rank_presentation1,rank_presentation2,rank_oracle,formula_value,torsion_flag\n";
  for (auto [r, n] : grid) {
    const int D = n + degree_bound_offset;
    const auto p1 = qsym_quotient_betti(r, n, D);
    const auto p2 = tensor_presentation_betti(r, n, D);
    const auto oracle = betti_by_ohl(r, n);
    for (int d = 0; d <= D; ++d) {
      const long long o = d < static_cast<int>(oracle.size()) ? oracle[d] : 0;
      os << r << ',' << n << ',' << d << ',' << p1.ranks[d] << ',' << p2.ranks[d] << ',' << o
         << ',' << betti_closed_formula(r, n, d) << ','
         << ((p1.torsion_free[d] && p2.torsion_free[d]) ? 0 : 1) << '\n';
    }
  }
  return os.str();
}

} // namespace qgr
