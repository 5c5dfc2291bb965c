#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qgrass/int_types.hpp"

namespace qgr {

/// Dense matrix over the integers, row major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  void append_row(const std::vector<Int>& row);
  bool operator==(const IntMatrix&) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Row-style Hermite normal form of the row lattice: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot); zero rows
/// dropped.  Two matrices span the same row lattice iff their HNFs agree.
IntMatrix hnf(IntMatrix m);

int rank(const IntMatrix& m);

/// Nonzero elementary divisors d_1 | d_2 | ... of the matrix.
std::vector<Int> snf_diagonal(IntMatrix m);

/// Equality of row lattices.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

/// Sparse exact linear system over the rationals.  Rows are added as
/// sparse integer combinations; solve() produces one particular solution
/// and a kernel basis, or nothing if the system is infeasible.
class SparseLinearSystem {
public:
  explicit SparseLinearSystem(int ncols) : ncols_(ncols) {}

  int cols() const { return ncols_; }
  /// Adds the row sum_j coeffs[j] * x_j = rhs; zero coefficients skipped.
  void add_row(const std::map<int, Int>& coeffs, const Int& rhs);

  struct Solution {
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> kernel;
    bool integral = false; // particular has unit denominators
  };
  std::optional<Solution> solve() const;

private:
  int ncols_;
  std::vector<std::map<int, Int>> rows_;
  std::vector<Int> rhs_;
};

/// Integer solution of A x = b via column HNF; empty if none exists over Z.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

} // namespace qgr
