// Acceptance suite: runs every acceptance criterion at its stated scale and
// tolerance (all checks are exact) and prints one pass/fail line each.
// Exit code 0 iff every criterion passes; reported discrepancies in the
// printed closed-form Betti values are expected and do not fail the run.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "qgrass/gkm.hpp"
#include "qgrass/pluecker.hpp"
#include "qgrass/polytopes.hpp"
#include "qgrass/presentations.hpp"
#include "qgrass/report.hpp"

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& what, const std::string& detail = {}) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

bool suite_ok(const std::string& name, qgr::verify::Options opt, std::string* timing = nullptr) {
  const auto rep = qgr::verify::run_suite(name, opt);
  if (timing) *timing = std::to_string(rep.millis) + " ms";
  if (!rep.ok()) {
    for (const auto& c : rep.checks)
      if (c.status == qgr::verify::Status::Fail)
        std::cout << "    failed: " << c.name << " " << c.detail << std::endl;
  }
  return rep.ok();
}

} // namespace

int main() {
  using qgr::verify::Options;
  std::string t;

  // 1. Bijection round trips and |alpha| = OHL(lambda), exhaustive n <= 9.
  line(1, suite_ok("bijections", Options{}, &t),
       "subset/partition/composition/quasigrassmannian bijections, n <= 9", t);

  // 2. InvQ(A) from Kreweras-adjacency = InvNC(z_A) = Split/Merge closed
  //    form, |InvQ| = OHL, exhaustive n <= 9.
  line(2, suite_ok("edges", Options{}, &t), "quasisymmetric Johnson edge theorem, n <= 9", t);

  // 3. Gale order equals Bruhat order on quasigrassmannians, n <= 8.
  line(3, suite_ok("bruhat", Options{}, &t), "Gale = Bruhat on z_A, n <= 8", t);

  // 4. Sampled Pluecker vanishing: 100 seeded points per nc chart, exact
  //    zero products on removed edges, generic converse; fixture (2,4).
  {
    Options opt;
    opt.samples = 100;
    opt.seed = 7;
    const auto rm = qgr::removed_edges(2, 4);
    const bool fixture = rm.size() == 1 && rm[0].first.elems() == std::vector<int>{2, 3} &&
                         rm[0].second.elems() == std::vector<int>{3, 4};
    line(4, fixture && suite_ok("pluecker", opt, &t),
         "removed-edge Pluecker products vanish on sampled nc charts (seed 7)", t);
  }

  // 5/6. Both cohomology presentations match the OHL census up to degree
  //      n+2 with torsion-free graded pieces and the HNF free-basis check.
  {
    bool p1 = true, p2 = true, free_basis = true;
    std::ostringstream os;
    const auto t0 = std::chrono::steady_clock::now();
    for (auto [r, n] : qgr::verify::default_grid()) {
      if (r > 3 || n > 6) continue;
      const int D = n + 2;
      const auto oracle = qgr::betti_by_ohl(r, n);
      auto expect = [&](int d) { return d < (int)oracle.size() ? oracle[d] : 0LL; };
      const auto q = qgr::qsym_quotient_betti(r, n, D);
      for (int d = 0; d <= D; ++d) p1 = p1 && q.ranks[d] == expect(d);
      p1 = p1 && q.all_torsion_free();
      free_basis = free_basis && qgr::ideal_free_basis_check(r, n, D);
      const auto tp = qgr::tensor_presentation_betti(r, n, D);
      for (int d = 0; d <= D; ++d) p2 = p2 && tp.ranks[d] == expect(d);
      p2 = p2 && tp.all_torsion_free();
    }
    os << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                t0)
              .count()
       << " ms";
    line(5, p1 && free_basis,
         "QSym_r/<F_alpha outside Comp> has the census ranks, free over Z (D = n+2)", os.str());
    line(6, p2, "tensor presentation has the census ranks (D = n+2)");
  }

  // 7. Three Betti routes agree; the printed closed formula's deviation is
  //    reported, never adopted.
  {
    bool routes = true;
    for (auto [r, n] : qgr::verify::default_grid()) {
      if (r > 3 || n > 6) continue;
      const auto census = qgr::betti_by_ohl(r, n);
      const auto q = qgr::qsym_quotient_betti(r, n, n + 2);
      const auto gk = qgr::gkm_quotient_betti(qgr::quasi_johnson_from_inversions(r, n));
      for (std::size_t k = 0; k < census.size(); ++k) {
        routes = routes && q.ranks[k] == census[k];
        routes = routes && k < gk.size() && gk[k] == census[k];
      }
    }
    const long long printed = qgr::betti_closed_formula(2, 4, 2);
    const long long census24 = qgr::betti_by_ohl(2, 4)[2];
    line(7, routes && printed == 1 && census24 == 2,
         "OHL census = presentation ranks = GKM flowup degrees",
         "REPORTED DISCREPANCY: printed formula gives " + std::to_string(printed) +
             " at (2,4), k=2; census value " + std::to_string(census24) + " is authoritative");
  }

  // 8. The printed F_12 and F_2 expansions are classes and flowup classes.
  {
    const auto rep = qgr::psi_fixture_check();
    line(8, rep.ok(), "printed (2,4) equivariant fixtures are flowup classes",
         "F_12 at " + rep.f12_vertex.to_string() + ", F_2 at " + rep.f2_vertex.to_string());
  }

  // 9. Flowup classes exist for every vertex on the grid with n <= 6, with
  //    stated supports, degrees and leading values; dimensions logged.
  {
    bool ok = true;
    std::ostringstream dims;
    for (auto [r, n] : qgr::verify::default_grid()) {
      if (n > 6) continue;
      const auto qj = qgr::quasi_johnson_from_inversions(r, n);
      dims << " (" << r << "," << n << "):";
      for (const auto& a : qj.vertices()) {
        const auto sol = qgr::flowup_solve(qj, a);
        ok = ok && qgr::check_flowup(qj, sol).empty() &&
             sol.degree == qgr::ohl(qgr::subset_to_partition(a));
        dims << sol.perturbations.size();
      }
    }
    line(9, ok, "flowup solver succeeds on the full grid", "perturbation dims" + dims.str());
  }

  // 10. Polytope fixed points: four routes agree; (2,4) alpha=(2,1) has the
  //     five vertices of a square pyramid; component counts match.
  line(10, suite_ok("polytopes", Options{}, &t), "moment polytopes and fixed-point routes", t);

  // 11. Ribbon identity [F_alpha] s_mu = c^eta_{nu,mu} on the stated grid.
  line(11, suite_ok("ribbon", Options{}, &t),
       "[F_alpha] s_mu matches the ribbon Littlewood-Richardson coefficient", t);

  // 12. Flag projection patterns: injective exactly at z_A, with the
  //     printed 653241 position fixture, exhaustive n <= 8.
  line(12, suite_ok("paving", Options{}, &t), "projection patterns over fibers, n <= 8", t);

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
