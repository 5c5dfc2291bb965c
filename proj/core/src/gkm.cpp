#include "qgrass/gkm.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qgrass/intmatrix.hpp"
#include "qgrass/noncrossing.hpp"
#include "qgrass/partition.hpp"

namespace qgr {

GkmClass gkm_zero(const EdgeLabeledGraph& g) {
  GkmClass cls;
  cls.values.assign(g.vertices().size(), IntPolynomial(VarSet{0, g.n()}));
  return cls;
}

GkmClass gkm_constant(const EdgeLabeledGraph& g, const Int& c) {
  GkmClass cls;
  cls.values.assign(g.vertices().size(), IntPolynomial::constant(VarSet{0, g.n()}, c));
  return cls;
}

bool is_class(const EdgeLabeledGraph& g, const GkmClass& cls) {
  for (const auto& e : g.edges()) {
    const IntPolynomial diff = cls.values[e.u] - cls.values[e.v];
    if (!divide_by_t_difference(diff, e.i, e.j).has_value()) return false;
  }
  return true;
}

IntPolynomial invq_label_product(const EdgeLabeledGraph& g, const RSubset& a) {
  const VarSet tv{0, g.n()};
  IntPolynomial prod = IntPolynomial::constant(tv, 1);
  for (auto [i, j] : invq(a, g))
    prod = prod * (IntPolynomial::t(tv, j) - IntPolynomial::t(tv, i));
  return prod;
}

namespace {

// Collapse a t-monomial under t_j -> t_i (0-based exponent positions).
std::vector<int> collapse(const std::vector<int>& e, int i, int j) {
  std::vector<int> out = e;
  out[i - 1] += out[j - 1];
  out[j - 1] = 0;
  return out;
}

} // namespace

FlowupSolution flowup_solve(const EdgeLabeledGraph& g, const RSubset& a) {
  const int n = g.n();
  const VarSet tv{0, n};
  const int d = ohl(subset_to_partition(a));
  const int base_idx = g.index_of(a);

  // Unknown vertices: the Gale up-set of A minus A itself.
  std::vector<int> unknown; // vertex indices
  std::vector<int> slot(g.vertices().size(), -1);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (static_cast<int>(v) == base_idx) continue;
    if (gale_leq(a, g.vertex(static_cast<int>(v))))
      slot[v] = static_cast<int>(unknown.size()), unknown.push_back(static_cast<int>(v));
  }
  const auto monos = monomials_of_degree(n, d);
  std::map<std::vector<int>, int> mono_idx;
  for (std::size_t k = 0; k < monos.size(); ++k) mono_idx[monos[k]] = static_cast<int>(k);
  const int stride = static_cast<int>(monos.size());

  const IntPolynomial prescribed = invq_label_product(g, a);

  // Edge congruences, one equation per collapsed monomial: the same sparse
  // rows feed the rational solver and, if needed, the integer fallback.
  std::vector<std::map<int, Int>> rows;
  std::vector<Int> rhs;
  for (const auto& e : g.edges()) {
    const bool u_unknown = slot[e.u] >= 0, v_unknown = slot[e.v] >= 0;
    const bool u_base = e.u == base_idx, v_base = e.v == base_idx;
    if (!u_unknown && !v_unknown && !u_base && !v_base) continue;
    std::map<std::vector<int>, std::pair<std::map<int, Int>, Int>> eqs;
    auto contribute = [&](int vertex, int sign) {
      if (slot[vertex] >= 0) {
        for (std::size_t k = 0; k < monos.size(); ++k) {
          auto& eq = eqs[collapse(monos[k], e.i, e.j)];
          eq.first[slot[vertex] * stride + static_cast<int>(k)] += sign;
        }
      } else if (vertex == base_idx) {
        for (const auto& [exp, c] : prescribed.terms())
          eqs[collapse(exp, e.i, e.j)].second -= sign * c;
      } // vertices outside the up-set carry 0
    };
    contribute(e.u, +1);
    contribute(e.v, -1);
    for (auto& [key, eq] : eqs) {
      rows.push_back(std::move(eq.first));
      rhs.push_back(eq.second);
    }
  }

  const int ncols = static_cast<int>(unknown.size()) * stride;
  SparseLinearSystem sys(ncols);
  for (std::size_t k = 0; k < rows.size(); ++k) sys.add_row(rows[k], rhs[k]);

  const auto sol = sys.solve();
  if (!sol.has_value())
    throw std::logic_error("flowup_solve: infeasible edge congruences at " + a.to_string());

  FlowupSolution out;
  out.base = a;
  out.degree = d;
  out.integral = sol->integral;

  std::vector<Int> coeffs(sol->particular.size());
  if (sol->integral) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = numerator(sol->particular[k]);
  } else {
    // Integrality repair: solve the same system over Z via column HNF.
    IntMatrix mat(static_cast<int>(rows.size()), ncols);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (const auto& [col, v] : rows[k]) mat.at(static_cast<int>(k), col) = v;
    const auto integral = solve_integer(mat, rhs);
    if (!integral.has_value())
      throw std::logic_error("flowup_solve: no integral class at " + a.to_string());
    coeffs = *integral;
  }

  auto build_class = [&](const std::vector<Int>& c) {
    GkmClass cls = gkm_zero(g);
    for (std::size_t uidx = 0; uidx < unknown.size(); ++uidx) {
      IntPolynomial p(tv);
      for (int k = 0; k < stride; ++k) p.add_term(monos[k], c[uidx * stride + k]);
      cls.values[unknown[uidx]] = std::move(p);
    }
    cls.values[base_idx] = prescribed;
    return cls;
  };
  out.particular = build_class(coeffs);

  for (const auto& kvec : sol->kernel) {
    Int denom_lcm = 1;
    for (const auto& q : kvec) denom_lcm = lcm(denom_lcm, Int(denominator(q)));
    std::vector<Int> kc(kvec.size());
    for (std::size_t k = 0; k < kvec.size(); ++k)
      kc[k] = numerator(kvec[k]) * (denom_lcm / denominator(kvec[k]));
    GkmClass cls = build_class(kc);
    cls.values[base_idx] = IntPolynomial(tv); // perturbations vanish at the base
    out.perturbations.push_back(std::move(cls));
  }
  return out;
}

std::string check_flowup(const EdgeLabeledGraph& g, const FlowupSolution& sol) {
  const int base_idx = g.index_of(sol.base);
  if (!(sol.particular.values[base_idx] == invq_label_product(g, sol.base)))
    return "value at base vertex differs from the InvQ label product";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const auto& f = sol.particular.values[v];
    if (!gale_leq(sol.base, g.vertex(static_cast<int>(v)))) {
      if (!f.is_zero()) return "support leaks below " + sol.base.to_string();
    }
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != sol.degree))
      return "vertex value is not homogeneous of the flowup degree";
  }
  if (!is_class(g, sol.particular)) return "edge divisibility fails";
  for (const auto& pert : sol.perturbations) {
    if (!pert.values[base_idx].is_zero()) return "perturbation nonzero at base";
    if (!is_class(g, pert)) return "perturbation is not a class";
  }
  return {};
}

std::vector<long long> gkm_quotient_betti(const EdgeLabeledGraph& g) {
  std::vector<long long> out;
  for (const auto& a : g.vertices()) {
    const auto sol = flowup_solve(g, a);
    const auto err = check_flowup(g, sol);
    if (!err.empty()) throw std::logic_error("gkm_quotient_betti: " + err);
    if (static_cast<int>(out.size()) <= sol.degree) out.resize(sol.degree + 1, 0);
    ++out[sol.degree];
  }
  return out;
}

GkmClass evaluate_fixture(const EdgeLabeledGraph& g, const IntPolynomial& f) {
  GkmClass cls = gkm_zero(g);
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    cls.values[v] = f.substitute_x_to_t(z_of(g.vertex(static_cast<int>(v))).perm());
  return cls;
}

namespace {

// Flowup structure of a given class: locate the Gale-minimal vertex with a
// nonzero value, then check support, degree and leading value against it.
bool flowup_structure_ok(const EdgeLabeledGraph& g, const GkmClass& cls, RSubset& base_out) {
  int base = -1;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (cls.values[v].is_zero()) continue;
    if (base == -1 || gale_leq(g.vertex(static_cast<int>(v)), g.vertex(base)))
      base = static_cast<int>(v);
  }
  if (base == -1) return false;
  const RSubset a = g.vertex(base);
  base_out = a;
  if (!(cls.values[base] == invq_label_product(g, a))) return false;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (!cls.values[v].is_zero() && !gale_leq(a, g.vertex(static_cast<int>(v)))) return false;
  return true;
}

} // namespace

PsiFixtureReport psi_fixture_check() {
  const auto qj = quasi_johnson_from_inversions(2, 4);
  const VarSet mixed{2, 4};
  const auto x = [&](int i) { return IntPolynomial::x(mixed, i); };
  const auto t = [&](int i) { return IntPolynomial::t(mixed, i); };

  // F_12(x_2; t_4) = (x_1 - t_3)(x_1 - t_1)(x_2 - t_1)
  const IntPolynomial f12 = (x(1) - t(3)) * (x(1) - t(1)) * (x(2) - t(1));
  // F_2(x_2; t_4) = x_2^2 + x_1 x_2 - x_2 t_3 - x_2 t_2 + x_1^2 - x_1 t_3
  //                 - x_1 t_2 + t_2 t_3 - x_2 t_1 - x_1 t_1 + t_1 t_3 + t_1 t_2
  const IntPolynomial f2 = x(2) * x(2) + x(1) * x(2) - x(2) * t(3) - x(2) * t(2) + x(1) * x(1) -
                           x(1) * t(3) - x(1) * t(2) + t(2) * t(3) - x(2) * t(1) - x(1) * t(1) +
                           t(1) * t(3) + t(1) * t(2);

  PsiFixtureReport rep;
  const GkmClass c12 = evaluate_fixture(qj, f12);
  const GkmClass c2 = evaluate_fixture(qj, f2);
  rep.f12_is_class = is_class(qj, c12);
  rep.f2_is_class = is_class(qj, c2);
  rep.f12_flowup_ok = flowup_structure_ok(qj, c12, rep.f12_vertex);
  rep.f2_flowup_ok = flowup_structure_ok(qj, c2, rep.f2_vertex);
  return rep;
}

} // namespace qgr
