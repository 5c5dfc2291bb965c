#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgrass/int_types.hpp"
#include "qgrass/permutation.hpp"

namespace qgr {

/// Declared variable set: x_1..x_nx followed by t_1..t_nt.  Exponent
/// vectors are dense arrays of length nx + nt with x before t.
struct VarSet {
  int nx = 0;
  int nt = 0;
  int total() const { return nx + nt; }
  bool operator==(const VarSet&) const = default;
};

/// Graded lexicographic order on exponent vectors (x before t).
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Multivariate polynomial with arbitrary-precision integer coefficients in
/// canonical form: zero coefficients are never stored.
class IntPolynomial {
public:
  using TermMap = std::map<std::vector<int>, Int, GrlexLess>;

  IntPolynomial() = default;
  explicit IntPolynomial(VarSet vars) : vars_(vars) {}

  static IntPolynomial constant(VarSet vars, Int c);
  static IntPolynomial x(VarSet vars, int i); // x_i, 1-indexed
  static IntPolynomial t(VarSet vars, int i); // t_i, 1-indexed
  static IntPolynomial monomial(VarSet vars, std::vector<int> exp, Int coef);

  VarSet vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Int coeff(const std::vector<int>& exp) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Int& c) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  void add_term(const std::vector<int>& exp, const Int& coef);

  /// Substitution x_i <- t_{w(i)} for every x variable; the result lives in
  /// the t-only variable set {0, nt}.
  IntPolynomial substitute_x_to_t(const Permutation& w) const;

  /// Substitution t_j <- t_i (the canonical quotient map modulo t_j - t_i).
  IntPolynomial identify_t(int i, int j) const;

  /// Substitution x_i <- 0 followed by shifting x_{i+1}.. down one slot;
  /// the Bergeron-Sottile operation.  Result has one fewer x variable.
  IntPolynomial bs_collapse_x(int i) const;

  Int evaluate(const std::vector<Int>& xvals, const std::vector<Int>& tvals) const;

  std::string to_string() const;

private:
  VarSet vars_;
  TermMap terms_;
};

/// Exact division by the linear form t_j - t_i: returns the quotient when
/// the division is exact, nullopt otherwise.
std::optional<IntPolynomial> divide_by_t_difference(const IntPolynomial& f, int i, int j);

/// True iff (t_j - t_i) divides f; equivalent to identify_t vanishing.
bool divisible_by_t_difference(const IntPolynomial& f, int i, int j);

/// All exponent vectors of total degree d in `count` variables, grlex order.
std::vector<std::vector<int>> monomials_of_degree(int count, int d);

} // namespace qgr
