#include "qgrass/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgr {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

} // namespace

void IntMatrix::append_row(const std::vector<Int>& row) {
  if (cols_ == 0 && rows_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("IntMatrix::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix hnf(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    // Euclidean reduction within the column below pivot_row.
    while (true) {
      int best = -1;
      for (int i = pivot_row; i < rows; ++i)
        if (m.at(i, c) != 0 && (best == -1 || abs(m.at(i, c)) < abs(m.at(best, c))))
          best = i;
      if (best == -1) break;
      if (best != pivot_row)
        for (int j = 0; j < cols; ++j) std::swap(m.at(best, j), m.at(pivot_row, j));
      bool reduced_all = true;
      for (int i = pivot_row + 1; i < rows; ++i) {
        if (m.at(i, c) == 0) continue;
        const Int q = floor_div(m.at(i, c), m.at(pivot_row, c));
        if (q != 0)
          for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pivot_row, j);
        if (m.at(i, c) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (m.at(pivot_row, c) == 0) continue;
    if (m.at(pivot_row, c) < 0)
      for (int j = 0; j < cols; ++j) m.at(pivot_row, j) = -m.at(pivot_row, j);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < pivot_row; ++i) {
      const Int q = floor_div(m.at(i, c), m.at(pivot_row, c));
      if (q != 0)
        for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(pivot_row, j);
    }
    ++pivot_row;
  }
  IntMatrix out(pivot_row, cols);
  for (int i = 0; i < pivot_row; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

int rank(const IntMatrix& m) { return hnf(m).rows(); }

std::vector<Int> snf_diagonal(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  const int steps = std::min(rows, cols);
  std::vector<Int> diag;
  int top = 0;
  while (top < steps) {
    // Find a nonzero entry in the submatrix at (top, top).
    int pi = -1, pj = -1;
    for (int i = top; i < rows; ++i)
      for (int j = top; j < cols; ++j)
        if (m.at(i, j) != 0 && (pi == -1 || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    for (int j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(top, j));
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, top));
    bool clean = true;
    for (int i = top + 1; i < rows; ++i) {
      if (m.at(i, top) == 0) continue;
      const Int q = floor_div(m.at(i, top), m.at(top, top));
      for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(top, j);
      if (m.at(i, top) != 0) clean = false;
    }
    for (int j = top + 1; j < cols; ++j) {
      if (m.at(top, j) == 0) continue;
      const Int q = floor_div(m.at(top, j), m.at(top, top));
      for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, top);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue; // re-pick a smaller pivot
    // Divisibility fix-up: the pivot must divide every remaining entry.
    bool fixed = false;
    for (int i = top + 1; i < rows && !fixed; ++i)
      for (int j = top + 1; j < cols && !fixed; ++j)
        if (m.at(i, j) % m.at(top, top) != 0) {
          for (int jj = 0; jj < cols; ++jj) m.at(top, jj) += m.at(i, jj);
          fixed = true;
        }
    if (fixed) continue;
    if (m.at(top, top) < 0) m.at(top, top) = -m.at(top, top);
    diag.push_back(m.at(top, top));
    ++top;
  }
  return diag;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hnf(a) == hnf(b);
}

void SparseLinearSystem::add_row(const std::map<int, Int>& coeffs, const Int& rhs) {
  std::map<int, Int> row;
  for (const auto& [c, v] : coeffs) {
    if (v == 0) continue;
    if (c < 0 || c >= ncols_) throw std::out_of_range("SparseLinearSystem: column out of range");
    row.emplace(c, v);
  }
  if (row.empty() && rhs == 0) return;
  rows_.push_back(std::move(row));
  rhs_.push_back(rhs);
}

std::optional<SparseLinearSystem::Solution> SparseLinearSystem::solve() const {
  // Working copy over rationals.
  std::vector<std::map<int, Rat>> work;
  std::vector<Rat> rhs;
  work.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::map<int, Rat> row;
    for (const auto& [c, v] : rows_[i]) row.emplace(c, Rat(v));
    work.push_back(std::move(row));
    rhs.emplace_back(rhs_[i]);
  }

  std::vector<char> done(work.size(), 0);
  std::vector<int> pivot_col_of_row(work.size(), -1);
  std::vector<char> col_is_pivot(ncols_, 0);
  std::vector<int> elimination_order;

  while (true) {
    // Pick the unprocessed row with fewest nonzeros (Markowitz-style),
    // preferring rows that contain a unit entry.
    int best = -1;
    std::size_t best_sz = 0;
    bool best_unit = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (done[i] || work[i].empty()) continue;
      bool unit = false;
      for (const auto& [c, v] : work[i])
        if (v == 1 || v == -1) {
          unit = true;
          break;
        }
      if (best == -1 || std::make_pair(!unit, work[i].size()) <
                            std::make_pair(!best_unit, best_sz)) {
        best = static_cast<int>(i);
        best_sz = work[i].size();
        best_unit = unit;
      }
    }
    if (best == -1) break;
    // Pivot column: a unit entry if available, else the first.
    int pc = work[best].begin()->first;
    for (const auto& [c, v] : work[best])
      if (v == 1 || v == -1) {
        pc = c;
        break;
      }
    const Rat pv = work[best].at(pc);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (static_cast<int>(i) == best) continue;
      auto it = work[i].find(pc);
      if (it == work[i].end()) continue;
      const Rat factor = it->second / pv;
      for (const auto& [c, v] : work[best]) {
        auto jt = work[i].find(c);
        if (jt == work[i].end()) {
          Rat nv = -factor * v;
          if (nv != 0) work[i].emplace(c, std::move(nv));
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) work[i].erase(jt);
        }
      }
      rhs[i] -= factor * rhs[best];
    }
    done[best] = 1;
    pivot_col_of_row[best] = pc;
    col_is_pivot[pc] = 1;
    elimination_order.push_back(best);
  }

  // Infeasibility: an empty row with nonzero right-hand side.
  for (std::size_t i = 0; i < work.size(); ++i)
    if (work[i].empty() && rhs[i] != 0) return std::nullopt;

  Solution sol;
  sol.particular.assign(ncols_, Rat(0));
  for (int row : elimination_order) {
    const int pc = pivot_col_of_row[row];
    // After full Gauss-Jordan the row involves only its pivot and free cols.
    Rat value = rhs[row];
    for (const auto& [c, v] : work[row])
      if (c != pc) value -= v * sol.particular[c]; // frees are zero; kept for clarity
    sol.particular[pc] = value / work[row].at(pc);
  }
  for (int c = 0; c < ncols_; ++c) {
    if (col_is_pivot[c]) continue;
    std::vector<Rat> vec(ncols_, Rat(0));
    vec[c] = 1;
    for (int row : elimination_order) {
      const int pc = pivot_col_of_row[row];
      auto it = work[row].find(c);
      if (it != work[row].end()) vec[pc] = -it->second / work[row].at(pc);
    }
    sol.kernel.push_back(std::move(vec));
  }
  sol.integral = std::all_of(sol.particular.begin(), sol.particular.end(),
                             [](const Rat& q) { return denominator(q) == 1; });
  return sol;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve_integer: rhs length mismatch");
  // Column-style HNF with transform: reduce A U = [H | 0] by unimodular
  // column operations, then solve H y = b by forward substitution.
  const int rows = a.rows(), cols = a.cols();
  IntMatrix h = a;
  IntMatrix u(cols, cols);
  for (int i = 0; i < cols; ++i) u.at(i, i) = 1;

  auto col_swap = [&](IntMatrix& m, int x, int y) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, x), m.at(i, y));
  };
  auto col_axpy = [&](IntMatrix& m, int dst, int src, const Int& q) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
  };

  int lead = 0;
  std::vector<int> pivot_rows;
  for (int row = 0; row < rows && lead < cols; ++row) {
    while (true) {
      int best = -1;
      for (int c = lead; c < cols; ++c)
        if (h.at(row, c) != 0 && (best == -1 || abs(h.at(row, c)) < abs(h.at(row, best))))
          best = c;
      if (best == -1) break;
      if (best != lead) {
        col_swap(h, best, lead);
        col_swap(u, best, lead);
      }
      bool clean = true;
      for (int c = lead + 1; c < cols; ++c) {
        if (h.at(row, c) == 0) continue;
        const Int q = floor_div(h.at(row, c), h.at(row, lead));
        if (q != 0) {
          col_axpy(h, c, lead, q);
          col_axpy(u, c, lead, q);
        }
        if (h.at(row, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (lead < cols && h.at(row, lead) != 0) {
      pivot_rows.push_back(row);
      ++lead;
    }
  }

  // Forward substitution on the lower-trapezoidal H.
  std::vector<Int> y(cols, 0);
  std::vector<Int> residual = b;
  for (int k = 0; k < static_cast<int>(pivot_rows.size()); ++k) {
    const int row = pivot_rows[k];
    if (residual[row] % h.at(row, k) != 0) return std::nullopt;
    y[k] = residual[row] / h.at(row, k);
    for (int i = 0; i < rows; ++i) residual[i] -= y[k] * h.at(i, k);
  }
  for (int i = 0; i < rows; ++i)
    if (residual[i] != 0) return std::nullopt;

  std::vector<Int> x(cols, 0);
  for (int i = 0; i < cols; ++i)
    for (int k = 0; k < cols; ++k)
      if (y[k] != 0) x[i] += u.at(i, k) * y[k];
  return x;
}

} // namespace qgr
