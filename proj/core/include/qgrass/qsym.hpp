#pragma once

#include <map>

#include "qgrass/composition.hpp"
#include "qgrass/partition.hpp"
#include "qgrass/polynomial.hpp"

namespace qgr {

/// Fundamental quasisymmetric polynomial F_alpha(x_1..x_r): sum over chains
/// 1 <= i_1 <= ... <= i_m <= r, strict at the descents of alpha.  Zero when
/// l(alpha) > r.
IntPolynomial fundamental(const Composition& alpha, int r);

/// The same sum over the shifted alphabet x_lo..x_hi inside a larger
/// declared variable set (used for tensor-factor polynomials).
IntPolynomial fundamental_in_window(const Composition& alpha, int lo, int hi, VarSet vars);

/// Monomial quasisymmetric polynomial M_alpha(x_1..x_r).
IntPolynomial monomial_qsym(const Composition& alpha, int r);
IntPolynomial monomial_qsym_in_window(const Composition& alpha, int lo, int hi, VarSet vars);

/// Schur polynomial s_lambda(x_1..x_r) via the semistandard tableau sum.
IntPolynomial schur(const Partition& lambda, int r);

/// Quasisymmetry of an x-only polynomial via the Bergeron-Sottile
/// criterion: collapsing slot i agrees with collapsing slot i+1 for all i.
bool is_qsym(const IntPolynomial& f, int r);
/// The coefficient-pattern definition, kept as an oracle.
bool is_qsym_by_pattern(const IntPolynomial& f, int r);

/// Expansion of a quasisymmetric polynomial in the fundamental basis.
/// Throws if f is not quasisymmetric in x_1..x_r.
std::map<Composition, Int> f_expansion(const IntPolynomial& f, int r);

/// Substitution x_i <- t_{w(i)}; defined on mixed polynomials.
IntPolynomial evaluate_at_perm(const IntPolynomial& f, const Permutation& w);

/// Littlewood-Richardson coefficient c^eta_{nu,mu}: the coefficient of
/// s_eta in s_nu * s_mu, computed by exact multiplication and triangular
/// Schur elimination in nvars variables.  Requires nvars >= l(eta).
Int lr_coefficient(const Partition& nu, const Partition& mu, const Partition& eta, int nvars);

/// Expansion of a symmetric polynomial in Schur polynomials.
std::map<Partition, Int> schur_expand(const IntPolynomial& f, int nvars);

/// Number of standard Young tableaux of shape mu per descent composition;
/// the Stanley oracle for [F_alpha] s_mu.
std::map<Composition, long long> syt_descent_counts(const Partition& mu);

} // namespace qgr
