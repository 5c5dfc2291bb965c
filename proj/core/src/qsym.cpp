#include "qgrass/qsym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qgr {

IntPolynomial fundamental_in_window(const Composition& alpha, int lo, int hi, VarSet vars) {
  IntPolynomial out(vars);
  const int m = static_cast<int>(alpha.size());
  if (m == 0) return IntPolynomial::constant(vars, 1);
  const auto des = alpha.descents();
  std::vector<int> chain(m);
  std::vector<int> expo(vars.total(), 0);
  std::function<void(int, int)> rec = [&](int pos, int minvar) {
    if (pos == m) {
      std::fill(expo.begin(), expo.end(), 0);
      for (int k = 0; k < m; ++k) ++expo[chain[k] - 1];
      out.add_term(expo, 1);
      return;
    }
    for (int v = minvar; v <= hi; ++v) {
      chain[pos] = v;
      rec(pos + 1, des.count(pos + 1) ? v + 1 : v);
    }
  };
  rec(0, lo);
  return out;
}

IntPolynomial fundamental(const Composition& alpha, int r) {
  return fundamental_in_window(alpha, 1, r, VarSet{r, 0});
}

IntPolynomial monomial_qsym_in_window(const Composition& alpha, int lo, int hi, VarSet vars) {
  IntPolynomial out(vars);
  const int l = alpha.length();
  if (l == 0) return IntPolynomial::constant(vars, 1);
  std::vector<int> pick(l);
  std::vector<int> expo(vars.total(), 0);
  std::function<void(int, int)> rec = [&](int pos, int minvar) {
    if (pos == l) {
      std::fill(expo.begin(), expo.end(), 0);
      for (int k = 0; k < l; ++k) expo[pick[k] - 1] = alpha.parts()[k];
      out.add_term(expo, 1);
      return;
    }
    for (int v = minvar; v <= hi; ++v) {
      pick[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, lo);
  return out;
}

IntPolynomial monomial_qsym(const Composition& alpha, int r) {
  return monomial_qsym_in_window(alpha, 1, r, VarSet{r, 0});
}

IntPolynomial schur(const Partition& lambda, int r) {
  const VarSet vars{r, 0};
  if (lambda.empty()) return IntPolynomial::constant(vars, 1);
  if (lambda.length() > r) return IntPolynomial(vars);
  IntPolynomial out(vars);
  // Fill rows top to bottom, cells left to right: weakly increasing along
  // rows, strictly increasing down columns.
  const int rows = lambda.length();
  std::vector<std::vector<int>> tab(rows);
  for (int i = 0; i < rows; ++i) tab[i].assign(lambda.part(i + 1), 0);
  std::vector<int> expo(vars.total(), 0);
  std::function<void(int, int)> rec = [&](int row, int col) {
    if (row == rows) {
      std::fill(expo.begin(), expo.end(), 0);
      for (const auto& tr : tab)
        for (int v : tr) ++expo[v - 1];
      out.add_term(expo, 1);
      return;
    }
    const int next_row = (col + 1 < static_cast<int>(tab[row].size())) ? row : row + 1;
    const int next_col = (next_row == row) ? col + 1 : 0;
    int low = 1;
    if (col > 0) low = std::max(low, tab[row][col - 1]);
    if (row > 0 && col < static_cast<int>(tab[row - 1].size())) low = std::max(low, tab[row - 1][col] + 1);
    for (int v = low; v <= r; ++v) {
      tab[row][col] = v;
      rec(next_row, next_col);
    }
  };
  rec(0, 0);
  return out;
}

bool is_qsym(const IntPolynomial& f, int r) {
  if (f.vars().nx != r || f.vars().nt != 0)
    throw std::invalid_argument("is_qsym: expected an x-only polynomial in r variables");
  for (int i = 1; i < r; ++i)
    if (!(f.bs_collapse_x(i) == f.bs_collapse_x(i + 1))) return false;
  return true;
}

bool is_qsym_by_pattern(const IntPolynomial& f, int r) {
  if (f.vars().nx != r || f.vars().nt != 0)
    throw std::invalid_argument("is_qsym_by_pattern: expected an x-only polynomial");
  // Coefficients of x_{i_1}^{c_1}...x_{i_k}^{c_k} must agree over ALL
  // increasing supports, including instances absent from the term map.
  std::set<std::vector<int>> patterns;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> packed;
    for (int k = 0; k < r; ++k)
      if (e[k] != 0) packed.push_back(e[k]);
    patterns.insert(std::move(packed));
  }
  for (const auto& pat : patterns) {
    const int k = static_cast<int>(pat.size());
    std::vector<int> lead(r, 0);
    for (int t = 0; t < k; ++t) lead[t] = pat[t];
    const Int expect = f.coeff(lead);
    // All increasing supports of size k.
    std::vector<int> supp(k);
    std::function<bool(int, int)> rec = [&](int pos, int next) -> bool {
      if (pos == k) {
        std::vector<int> e(r, 0);
        for (int t = 0; t < k; ++t) e[supp[t] - 1] = pat[t];
        return f.coeff(e) == expect;
      }
      for (int v = next; v <= r; ++v) {
        supp[pos] = v;
        if (!rec(pos + 1, v + 1)) return false;
      }
      return true;
    };
    if (!rec(0, 1)) return false;
  }
  return true;
}

std::map<Composition, Int> f_expansion(const IntPolynomial& f, int r) {
  if (!is_qsym(f, r)) throw std::invalid_argument("f_expansion: polynomial is not quasisymmetric");
  // Monomial-basis coordinates: m_beta = coefficient of the initial-run
  // monomial of beta.
  std::map<Composition, Int> mcoords;
  for (const auto& [e, c] : f.terms()) {
    bool initial_run = true;
    std::vector<int> parts;
    for (int k = 0; k < r; ++k) {
      if (e[k] == 0) {
        for (int k2 = k + 1; k2 < r; ++k2)
          if (e[k2] != 0) initial_run = false;
        break;
      }
      parts.push_back(e[k]);
    }
    if (initial_run) mcoords[Composition(parts)] = c;
  }
  // Invert the unitriangular F -> M transform by inclusion-exclusion over
  // subsets of the descent set.
  std::map<Composition, Int> out;
  for (const auto& [alpha, unused] : mcoords) {
    (void)unused;
    const int m = static_cast<int>(alpha.size());
    const auto des = alpha.descents();
    const std::vector<int> dlist(des.begin(), des.end());
    Int c = 0;
    for (unsigned mask = 0; mask < (1u << dlist.size()); ++mask) {
      std::set<int> sub;
      for (std::size_t k = 0; k < dlist.size(); ++k)
        if (mask & (1u << k)) sub.insert(dlist[k]);
      const Composition coarse = composition_from_descents(m, sub);
      auto it = mcoords.find(coarse);
      if (it == mcoords.end()) continue;
      const int sign_pow = static_cast<int>(dlist.size() - sub.size());
      c += (sign_pow % 2 == 0) ? it->second : -it->second;
    }
    if (c != 0) out[alpha] = c;
  }
  // Reconstruction check certifies the expansion.
  IntPolynomial rebuilt(f.vars());
  for (const auto& [alpha, c] : out) rebuilt += fundamental(alpha, r) * c;
  if (!(rebuilt == f)) throw std::logic_error("f_expansion: reconstruction failed");
  return out;
}

IntPolynomial evaluate_at_perm(const IntPolynomial& f, const Permutation& w) {
  return f.substitute_x_to_t(w);
}

std::map<Partition, Int> schur_expand(const IntPolynomial& f, int nvars) {
  std::map<Partition, Int> out;
  IntPolynomial rem = f;
  while (!rem.is_zero()) {
    // The grlex-leading monomial of a symmetric polynomial is a partition.
    const auto& [e, c] = *rem.terms().rbegin();
    std::vector<int> parts(e.begin(), e.begin() + nvars);
    if (!std::is_sorted(parts.rbegin(), parts.rend()))
      throw std::invalid_argument("schur_expand: polynomial is not symmetric");
    const Partition lambda(parts);
    out[lambda] += c;
    rem -= schur(lambda, nvars) * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Int lr_coefficient(const Partition& nu, const Partition& mu, const Partition& eta, int nvars) {
  if (nvars < eta.length())
    throw std::invalid_argument("lr_coefficient: need at least l(eta) variables");
  if (nu.length() > nvars || mu.length() > nvars) return 0;
  const auto expansion = schur_expand(schur(nu, nvars) * schur(mu, nvars), nvars);
  auto it = expansion.find(eta);
  return it == expansion.end() ? Int(0) : it->second;
}

std::map<Composition, long long> syt_descent_counts(const Partition& mu) {
  std::map<Composition, long long> out;
  const long long m = mu.size();
  if (m == 0) {
    out[Composition{}] = 1;
    return out;
  }
  const int rows = mu.length();
  std::vector<std::vector<int>> tab(rows);
  for (int i = 0; i < rows; ++i) tab[i].assign(mu.part(i + 1), 0);
  std::vector<int> row_of(m + 1, 0);
  std::vector<int> fill(rows, 0); // cells used per row
  std::function<void(int)> rec = [&](int entry) {
    if (entry > m) {
      std::set<int> des;
      for (int v = 1; v < m; ++v)
        if (row_of[v + 1] > row_of[v]) des.insert(v);
      ++out[composition_from_descents(static_cast<int>(m), des)];
      return;
    }
    for (int row = 0; row < rows; ++row) {
      if (fill[row] >= static_cast<int>(tab[row].size())) continue;
      if (row > 0 && fill[row - 1] <= fill[row]) continue; // column strictness
      row_of[entry] = row;
      ++fill[row];
      rec(entry + 1);
      --fill[row];
    }
  };
  rec(1);
  return out;
}

} // namespace qgr
