#pragma once

#include <string>
#include <vector>

#include "qgrass/int_types.hpp"

namespace qgr {

/// Even Betti numbers of the paving: b_{2k} = #{lambda in Part_{r,n} with
/// OHL(lambda) = k}.  The independent oracle for all Betti comparisons.
std::vector<long long> betti_by_ohl(int r, int n);

/// The printed closed-form Betti value sum_{a<=r, b<=n-1, a+b=k+1}
/// binom(k-2, a-1), evaluated verbatim with binom(m,0) = 1 for all m and
/// binom(m,j) = 0 for j < 0 or (m >= 0 and j > m) or (m < 0 and j > 0).
long long betti_closed_formula(int r, int n, int k);

struct GradedRanks {
  std::vector<long long> ranks;       // per degree 0..D
  std::vector<bool> torsion_free;     // per degree
  bool all_torsion_free() const;
};

/// Graded ranks of QSym_r / <F_alpha : alpha not in Comp_{r,n}> per degree
/// up to D, with a torsion report (Smith form of each ideal piece).
GradedRanks qsym_quotient_betti(int r, int n, int degree_bound);

/// Per degree d <= D, the ideal piece equals the lattice spanned by the
/// degree-d generators alone (Hermite form equality).
bool ideal_free_basis_check(int r, int n, int degree_bound);

/// Graded ranks of (QSym_r tensor QSym_{n-r}) / <positive-degree QSym_n>.
GradedRanks tensor_presentation_betti(int r, int n, int degree_bound);

/// CSV table rows (r, n, degree, rank_presentation1, rank_presentation2,
/// rank_oracle, formula_value, torsion_flag) for a list of grid points.
std::string betti_csv(const std::vector<std::pair<int, int>>& grid, int degree_bound_offset);

} // namespace qgr
