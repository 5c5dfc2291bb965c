#include "qgrass/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgr {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntPolynomial IntPolynomial::constant(VarSet vars, Int c) {
  IntPolynomial p(vars);
  if (c != 0) p.terms_.emplace(std::vector<int>(vars.total(), 0), std::move(c));
  return p;
}

IntPolynomial IntPolynomial::x(VarSet vars, int i) {
  if (i < 1 || i > vars.nx) throw std::invalid_argument("IntPolynomial::x: index out of range");
  std::vector<int> e(vars.total(), 0);
  e[i - 1] = 1;
  return monomial(vars, std::move(e), 1);
}

IntPolynomial IntPolynomial::t(VarSet vars, int i) {
  if (i < 1 || i > vars.nt) throw std::invalid_argument("IntPolynomial::t: index out of range");
  std::vector<int> e(vars.total(), 0);
  e[vars.nx + i - 1] = 1;
  return monomial(vars, std::move(e), 1);
}

IntPolynomial IntPolynomial::monomial(VarSet vars, std::vector<int> exp, Int coef) {
  if (static_cast<int>(exp.size()) != vars.total())
    throw std::invalid_argument("IntPolynomial::monomial: exponent length mismatch");
  IntPolynomial p(vars);
  if (coef != 0) p.terms_.emplace(std::move(exp), std::move(coef));
  return p;
}

int IntPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool IntPolynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    const int de = std::accumulate(e.begin(), e.end(), 0);
    if (d == -1) d = de;
    else if (d != de) return false;
  }
  return true;
}

Int IntPolynomial::coeff(const std::vector<int>& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void IntPolynomial::add_term(const std::vector<int>& exp, const Int& coef) {
  if (coef == 0) return;
  auto [it, fresh] = terms_.emplace(exp, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (!(vars_ == rhs.vars_)) throw std::invalid_argument("IntPolynomial: variable set mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (!(vars_ == rhs.vars_)) throw std::invalid_argument("IntPolynomial: variable set mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  IntPolynomial out = *this;
  out += rhs;
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  IntPolynomial out = *this;
  out -= rhs;
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (!(vars_ == rhs.vars_)) throw std::invalid_argument("IntPolynomial: variable set mismatch");
  IntPolynomial out(vars_);
  std::vector<int> e(vars_.total());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int k = 0; k < vars_.total(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
  IntPolynomial out(vars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

IntPolynomial IntPolynomial::substitute_x_to_t(const Permutation& w) const {
  if (vars_.nx > w.n() || vars_.nt < w.n())
    throw std::invalid_argument("substitute_x_to_t: permutation size incompatible");
  const VarSet tv{0, vars_.nt};
  IntPolynomial out(tv);
  std::vector<int> e(vars_.nt);
  for (const auto& [exp, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 1; i <= vars_.nx; ++i) e[w(i) - 1] += exp[i - 1];
    for (int i = 1; i <= vars_.nt; ++i) e[i - 1] += exp[vars_.nx + i - 1];
    out.add_term(e, c);
  }
  return out;
}

IntPolynomial IntPolynomial::identify_t(int i, int j) const {
  if (i < 1 || j < 1 || i > vars_.nt || j > vars_.nt)
    throw std::invalid_argument("identify_t: index out of range");
  IntPolynomial out(vars_);
  std::vector<int> e;
  for (const auto& [exp, c] : terms_) {
    e = exp;
    e[vars_.nx + i - 1] += e[vars_.nx + j - 1];
    e[vars_.nx + j - 1] = 0;
    out.add_term(e, c);
  }
  return out;
}

IntPolynomial IntPolynomial::bs_collapse_x(int i) const {
  if (i < 1 || i > vars_.nx) throw std::invalid_argument("bs_collapse_x: index out of range");
  const VarSet nv{vars_.nx - 1, vars_.nt};
  IntPolynomial out(nv);
  std::vector<int> e(nv.total());
  for (const auto& [exp, c] : terms_) {
    if (exp[i - 1] != 0) continue;
    int pos = 0;
    for (int k = 0; k < vars_.total(); ++k) {
      if (k == i - 1) continue;
      e[pos++] = exp[k];
    }
    out.add_term(e, c);
  }
  return out;
}

Int IntPolynomial::evaluate(const std::vector<Int>& xvals, const std::vector<Int>& tvals) const {
  if (static_cast<int>(xvals.size()) != vars_.nx || static_cast<int>(tvals.size()) != vars_.nt)
    throw std::invalid_argument("evaluate: value count mismatch");
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (int k = 0; k < vars_.nx; ++k)
      for (int p = 0; p < e[k]; ++p) term *= xvals[k];
    for (int k = 0; k < vars_.nt; ++k)
      for (int p = 0; p < e[vars_.nx + k]; ++p) term *= tvals[k];
    total += term;
  }
  return total;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Grlex descending: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int k = 0; k < vars_.total(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (k < vars_.nx) ? "x" + std::to_string(k + 1)
                             : "t" + std::to_string(k - vars_.nx + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << abs.str();
    } else {
      if (abs != 1) os << abs.str() << '*';
      os << mono;
    }
  }
  return os.str();
}

std::optional<IntPolynomial> divide_by_t_difference(const IntPolynomial& f, int i, int j) {
  if (!divisible_by_t_difference(f, i, j)) return std::nullopt;
  // f = sum_k c_k * t_j^k with c_k free of t_j; the quotient by (t_j - t_i)
  // of (t_j^k - t_i^k) is sum_{u+v=k-1} t_j^u t_i^v, and the remainder part
  // f|_{t_j = t_i} vanishes by the divisibility check.
  const VarSet vars = f.vars();
  const int pj = vars.nx + j - 1, pi = vars.nx + i - 1;
  IntPolynomial q(vars);
  std::vector<int> e;
  for (const auto& [exp, c] : f.terms()) {
    const int k = exp[pj];
    for (int u = 0; u <= k - 1; ++u) {
      e = exp;
      e[pj] = u;
      e[pi] += k - 1 - u;
      q.add_term(e, c);
    }
  }
  return q;
}

bool divisible_by_t_difference(const IntPolynomial& f, int i, int j) {
  return f.identify_t(i, j).is_zero();
}

std::vector<std::vector<int>> monomials_of_degree(int count, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(count, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == count - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (count == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

} // namespace qgr
