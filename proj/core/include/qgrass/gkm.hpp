#pragma once

#include <string>
#include <vector>

#include "qgrass/johnson.hpp"
#include "qgrass/polynomial.hpp"

namespace qgr {

/// An element of the graph cohomology ring: one polynomial in t_1..t_n per
/// vertex of the underlying graph.
struct GkmClass {
  std::vector<IntPolynomial> values; // indexed like graph.vertices()

  const IntPolynomial& at(int vertex) const { return values[vertex]; }
};

GkmClass gkm_zero(const EdgeLabeledGraph& g);
GkmClass gkm_constant(const EdgeLabeledGraph& g, const Int& c);

/// Membership: chi(uv) divides f_u - f_v on every edge, by exact division.
bool is_class(const EdgeLabeledGraph& g, const GkmClass& cls);

/// prod over (i,j) in InvQ(A) of (t_j - t_i).
IntPolynomial invq_label_product(const EdgeLabeledGraph& g, const RSubset& a);

/// A flowup solution at base vertex A: one homogeneous class of degree
/// OHL(lambda_A), supported on the Gale up-set of A, with value
/// invq_label_product at A, plus a basis of the space of perturbations
/// with the same support and degree that vanish at A.
struct FlowupSolution {
  RSubset base;
  int degree = 0;
  GkmClass particular;
  std::vector<GkmClass> perturbations;
  bool integral = false; // particular found integral without HNF repair
};

/// Solves the flowup conditions over QJ (or any labeled subgraph) by exact
/// linear algebra per degree.  Throws if the system is infeasible, which
/// would falsify the quotient presentation.
FlowupSolution flowup_solve(const EdgeLabeledGraph& g, const RSubset& a);

/// Structural checks on a flowup solution: support in the Gale up-set,
/// prescribed value at the base, membership, homogeneity of the stated
/// degree.  Returns a human-readable failure, or empty when all hold.
std::string check_flowup(const EdgeLabeledGraph& g, const FlowupSolution& sol);

/// Graded ranks of H_T(G)/(t_1..t_n) from the flowup degree multiset.
std::vector<long long> gkm_quotient_betti(const EdgeLabeledGraph& g);

/// The worked (r,n) = (2,4) equivariant fixtures: the two printed double
/// fundamental expansions, evaluated at x_i <- t_{z_B(i)} over all B.
struct PsiFixtureReport {
  bool f12_is_class = false;
  bool f2_is_class = false;
  RSubset f12_vertex; // base vertex of the flowup structure found
  RSubset f2_vertex;
  bool f12_flowup_ok = false;
  bool f2_flowup_ok = false;
  bool ok() const { return f12_is_class && f2_is_class && f12_flowup_ok && f2_flowup_ok; }
};
PsiFixtureReport psi_fixture_check();

/// The evaluation tuple (f(t_{z_B(1)},...) )_B of a mixed polynomial over
/// all vertices of g.
GkmClass evaluate_fixture(const EdgeLabeledGraph& g, const IntPolynomial& f);

} // namespace qgr
