#include "qgrass/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "qgrass/gkm.hpp"
#include "qgrass/noncrossing.hpp"
#include "qgrass/pluecker.hpp"
#include "qgrass/polytopes.hpp"
#include "qgrass/presentations.hpp"
#include "qgrass/qsym.hpp"

namespace qgr::verify {

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Fail; });
}

int Report::count(Status s) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

void Report::add(Status s, std::string name, std::string detail) {
  checks.push_back({std::move(name), s, std::move(detail)});
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (seed " << seed << ", grid";
  for (auto [r, n] : grid) os << " " << r << "," << n;
  os << ")\n";
  for (const auto& c : checks) {
    os << (c.status == Status::Pass ? "[PASS] " : c.status == Status::Fail ? "[FAIL] " : "[NOTE] ")
       << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (ok() ? "RESULT: pass" : "RESULT: fail") << " (" << count(Status::Pass) << " passed, "
     << count(Status::Fail) << " failed, " << count(Status::Note) << " noted, " << millis
     << " ms)\n";
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"status", c.status == Status::Pass   ? "pass"
                                      : c.status == Status::Fail ? "fail"
                                                                 : "note"},
                           {"detail", c.detail}});
  nlohmann::json grid_json = nlohmann::json::array();
  for (auto [r, n] : grid) grid_json.push_back({r, n});
  return {{"suite", suite}, {"grid", grid_json},       {"seed", seed},
          {"millis", millis}, {"checks", checks_json}, {"ok", ok()}};
}

const std::vector<std::pair<int, int>>& default_grid() {
  static const std::vector<std::pair<int, int>> grid{{1, 3}, {1, 5}, {2, 4}, {2, 5},
                                                     {2, 6}, {3, 5}, {3, 6}};
  return grid;
}

namespace {

std::vector<std::pair<int, int>> exhaustive_grid(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 0; r <= n; ++r) out.emplace_back(r, n);
  return out;
}

std::string pair_str(std::pair<int, int> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

Report suite_bijections(const Options& opt) {
  Report rep;
  rep.suite = "bijections";
  rep.grid = opt.grid.empty() ? exhaustive_grid(9) : opt.grid;
  for (auto [r, n] : rep.grid) {
    bool round_trips = true, sizes = true, qgrass_route = true;
    for (const auto& a : all_subsets(n, r)) {
      const Partition lam = subset_to_partition(a);
      if (!(partition_to_subset(lam, r, n) == a)) round_trips = false;
      const Composition alpha = partition_to_comp(lam);
      if (!(comp_to_partition(alpha) == lam)) round_trips = false;
      if (alpha.size() != ohl(lam)) sizes = false;
      if (r >= 1 && !(comp_of(z_of(a), r) == alpha)) qgrass_route = false;
    }
    const std::string at = pair_str({r, n});
    rep.add(round_trips ? Status::Pass : Status::Fail, "round-trips " + at);
    rep.add(sizes ? Status::Pass : Status::Fail, "|alpha| = OHL(lambda) " + at);
    rep.add(qgrass_route ? Status::Pass : Status::Fail,
            "composite route via quasigrassmannians " + at);
  }
  // The printed Frobenius closed form of the bijection has a suspected
  // misprint in its second leg entry; report where it deviates.
  int printed_mismatch = 0, checked = 0;
  for (int m = 1; m <= 9; ++m)
    for (const auto& alpha : compositions_of(m, m)) {
      ++checked;
      if (!(printed_frobenius_of_comp(alpha) == comp_to_partition(alpha).frobenius()))
        ++printed_mismatch;
    }
  rep.add(Status::Note, "printed Frobenius closed form",
          std::to_string(printed_mismatch) + " of " + std::to_string(checked) +
              " compositions deviate from the composite bijection (second leg entry reads a "
              "d-sum); the composite bijection is authoritative");
  return rep;
}

Report suite_edges(const Options& opt) {
  Report rep;
  rep.suite = "edges";
  rep.grid = opt.grid.empty() ? exhaustive_grid(9) : opt.grid;
  for (auto [r, n] : rep.grid) {
    if (r < 1 || r > n) continue;
    const auto qj_def = quasi_johnson(r, n);
    const auto qj_thm = quasi_johnson_from_inversions(r, n);
    bool graphs_equal = qj_def.edges().size() == qj_thm.edges().size();
    for (const auto& e : qj_def.edges())
      if (!qj_thm.has_edge(e.u, e.v)) graphs_equal = false;
    bool inv_equal = true, counts = true;
    long long edge_sum = 0;
    for (const auto& a : qj_def.vertices()) {
      const auto q = invq(a, qj_def);
      if (!(q == inv_nc(z_of(a)))) inv_equal = false;
      if (!(q == split_merge_invnc(a))) inv_equal = false;
      if (static_cast<int>(q.size()) != ohl(subset_to_partition(a))) counts = false;
      edge_sum += static_cast<long long>(q.size());
    }
    const std::string at = pair_str({r, n});
    rep.add(graphs_equal ? Status::Pass : Status::Fail,
            "QJ via Kreweras covers = QJ via Split/Merge " + at);
    rep.add(inv_equal ? Status::Pass : Status::Fail,
            "InvQ = InvNC(z_A) = closed form " + at);
    rep.add(counts && edge_sum == static_cast<long long>(qj_def.edges().size())
                ? Status::Pass
                : Status::Fail,
            "|InvQ(A)| = OHL and edge census " + at,
            "edges " + std::to_string(qj_def.edges().size()));
  }
  return rep;
}

Report suite_bruhat(const Options& opt) {
  Report rep;
  rep.suite = "bruhat";
  rep.grid = opt.grid.empty() ? exhaustive_grid(8) : opt.grid;
  for (auto [r, n] : rep.grid) {
    if (r < 1 || r >= n) continue;
    bool agree = true;
    const auto subsets = all_subsets(n, r);
    std::vector<NcPermutation> zs;
    zs.reserve(subsets.size());
    for (const auto& a : subsets) zs.push_back(z_of(a));
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (std::size_t j = 0; j < subsets.size(); ++j)
        if (gale_leq(subsets[i], subsets[j]) != bruhat_leq(zs[i].perm(), zs[j].perm()))
          agree = false;
    rep.add(agree ? Status::Pass : Status::Fail,
            "Gale order = Bruhat order on quasigrassmannians " + pair_str({r, n}));
  }
  return rep;
}

Report suite_paving(const Options& opt) {
  Report rep;
  rep.suite = "paving";
  rep.grid = opt.grid.empty() ? exhaustive_grid(8) : opt.grid;
  // Fixture from the worked example.
  {
    const auto w = NcPermutation::from_permutation(Permutation({6, 5, 3, 2, 4, 1}));
    const auto fp = flag_projection_pattern(*w, 3);
    const std::set<std::pair<int, int>> expect{{1, 1}, {1, 2}, {4, 2}, {2, 2}, {2, 3}};
    rep.add(fp.positions == expect ? Status::Pass : Status::Fail,
            "position fixture for 653241 at r=3");
  }
  std::map<int, std::vector<NcPermutation>> nc_cache;
  for (auto [r, n] : rep.grid) {
    if (r < 1 || r > n) continue;
    if (!nc_cache.count(n)) nc_cache[n] = enumerate_nc(n);
    bool ok = true;
    std::string why;
    for (const auto& w : nc_cache[n]) {
      const RSubset a = w.act_initial(r);
      const auto fp = flag_projection_pattern(w, r);
      const bool is_z = w == z_of(a);
      if (is_z != fp.bijective_onto_invq) {
        ok = false;
        why = "projection pattern mismatch at w = " + w.perm().to_string();
        break;
      }
      if (!is_z && fp.kernel_coordinates.empty()) {
        ok = false;
        why = "no kernel coordinate at w = " + w.perm().to_string();
        break;
      }
    }
    rep.add(ok ? Status::Pass : Status::Fail,
            "projection injective exactly at z_A " + pair_str({r, n}), why);
  }
  return rep;
}

Report suite_pluecker(const Options& opt) {
  Report rep;
  rep.suite = "pluecker";
  rep.grid = opt.grid.empty() ? default_grid() : opt.grid;
  rep.seed = opt.seed;
  // Fixture: the removed edge of (2,4) is exactly {23,34}.
  {
    const auto rm = removed_edges(2, 4);
    const bool ok = rm.size() == 1 && rm[0].first.elems() == std::vector<int>{2, 3} &&
                    rm[0].second.elems() == std::vector<int>{3, 4};
    rep.add(ok ? Status::Pass : Status::Fail, "removed edge of (2,4) is {23,34}");
  }
  for (auto [r, n] : rep.grid) {
    const auto vr = verify_vanishing(r, n, opt.samples, opt.seed);
    const std::string at = pair_str({r, n});
    rep.add(vr.all_removed_products_vanish ? Status::Pass : Status::Fail,
            "removed-edge products vanish on nc charts " + at,
            std::to_string(vr.products_checked) + " products");
    rep.add(vr.converse_found_everywhere ? Status::Pass : Status::Fail,
            "generic converse probe " + at);
    for (const auto& f : vr.failures) rep.add(Status::Note, "counterexample", f);
  }
  return rep;
}

Report suite_presentations(const Options& opt) {
  Report rep;
  rep.suite = "presentations";
  rep.grid = opt.grid.empty() ? default_grid() : opt.grid;
  for (auto [r, n] : rep.grid) {
    if (r > 3 || n > 6) { // heavy suite cap
      rep.add(Status::Note, "skipped " + pair_str({r, n}), "graded checks cap at r <= 3, n <= 6");
      continue;
    }
    const int D = n + opt.degree_offset;
    const auto oracle = betti_by_ohl(r, n);
    auto expect = [&](int d) {
      return d < static_cast<int>(oracle.size()) ? oracle[d] : 0LL;
    };
    const auto p1 = qsym_quotient_betti(r, n, D);
    bool ok1 = p1.all_torsion_free();
    for (int d = 0; d <= D; ++d) ok1 = ok1 && p1.ranks[d] == expect(d);
    const std::string at = pair_str({r, n});
    rep.add(ok1 ? Status::Pass : Status::Fail, "quotient presentation ranks " + at);
    rep.add(ideal_free_basis_check(r, n, D) ? Status::Pass : Status::Fail,
            "ideal free-basis (HNF) " + at);
    const auto p2 = tensor_presentation_betti(r, n, D);
    bool ok2 = p2.all_torsion_free();
    for (int d = 0; d <= D; ++d) ok2 = ok2 && p2.ranks[d] == expect(d);
    rep.add(ok2 ? Status::Pass : Status::Fail, "tensor presentation ranks " + at);
    // The printed closed formula is evaluated and reported, never asserted.
    std::string devs;
    for (int k = 0; k < static_cast<int>(oracle.size()); ++k)
      if (betti_closed_formula(r, n, k) != oracle[k])
        devs += (devs.empty() ? "k=" : ",k=") + std::to_string(k);
    if (!devs.empty())
      rep.add(Status::Note, "printed Betti formula deviates " + at,
              devs + "; OHL census is authoritative");
  }
  return rep;
}

Report suite_gkm(const Options& opt) {
  Report rep;
  rep.suite = "gkm";
  rep.grid = opt.grid.empty() ? default_grid() : opt.grid;
  const auto fixture = psi_fixture_check();
  rep.add(fixture.f12_is_class && fixture.f2_is_class ? Status::Pass : Status::Fail,
          "printed F_12 and F_2 evaluations are classes on QJ(2,4)");
  rep.add(fixture.f12_flowup_ok && fixture.f2_flowup_ok ? Status::Pass : Status::Fail,
          "fixtures are flowup classes with prescribed leading values",
          "F_12 at " + fixture.f12_vertex.to_string() + ", F_2 at " +
              fixture.f2_vertex.to_string());
  for (auto [r, n] : rep.grid) {
    if (r < 1 || r > n) continue;
    if (n > 6) { // heavy suite cap
      rep.add(Status::Note, "skipped " + pair_str({r, n}), "flowup solves cap at n <= 6");
      continue;
    }
    const auto qj = quasi_johnson_from_inversions(r, n);
    bool ok = true;
    std::string dims;
    try {
      for (const auto& a : qj.vertices()) {
        const auto sol = flowup_solve(qj, a);
        const auto err = check_flowup(qj, sol);
        if (!err.empty() || sol.degree != ohl(subset_to_partition(a))) {
          ok = false;
          break;
        }
        dims += (dims.empty() ? "" : ",") + std::to_string(sol.perturbations.size());
      }
    } catch (const std::exception& e) {
      ok = false;
      dims = e.what();
    }
    const std::string at = pair_str({r, n});
    rep.add(ok ? Status::Pass : Status::Fail, "flowup classes exist with stated shape " + at);
    rep.add(Status::Note, "flowup perturbation dimensions " + at, dims);
    if (ok) {
      const bool betti_ok = gkm_quotient_betti(qj) == betti_by_ohl(r, n);
      rep.add(betti_ok ? Status::Pass : Status::Fail,
              "GKM quotient ranks equal OHL census " + at);
    }
  }
  return rep;
}

Report suite_ribbon(const Options& opt) {
  Report rep;
  rep.suite = "ribbon";
  rep.grid = opt.grid.empty()
                 ? std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}
                 : opt.grid;
  for (auto [r, n] : rep.grid) {
    bool ok = true;
    std::string why;
    // Per-mu data shared across all alpha.
    std::vector<Partition> mus = partitions_in_box(r, n);
    std::vector<std::map<Composition, long long>> counts;
    std::vector<std::map<Composition, Int>> expansions;
    for (const auto& mu : mus) {
      counts.push_back(syt_descent_counts(mu));
      expansions.push_back(f_expansion(schur(mu, r), r));
    }
    for (const auto& alpha : compositions_in_box(r, n)) {
      const auto [eta, nu] = ribbon_shape(alpha);
      for (std::size_t mi = 0; mi < mus.size(); ++mi) {
        // Route 1: SYT descent statistics of mu.
        auto it = counts[mi].find(alpha);
        const Int via_syt = it == counts[mi].end() ? Int(0) : Int(it->second);
        // Route 2: linear-algebra expansion of s_mu in the F basis.
        auto jt = expansions[mi].find(alpha);
        const Int via_expansion = jt == expansions[mi].end() ? Int(0) : jt->second;
        // Route 3: Littlewood-Richardson coefficient of the ribbon.
        const int nv = std::max({eta.length(), nu.length(), mus[mi].length(), 1});
        const Int via_lr = lr_coefficient(nu, mus[mi], eta, nv);
        if (via_syt != via_expansion || via_syt != via_lr) {
          ok = false;
          why = "alpha=" + alpha.to_string() + " mu=" + mus[mi].to_string() + ": syt=" +
                via_syt.str() + " expansion=" + via_expansion.str() + " lr=" + via_lr.str();
        }
      }
    }
    rep.add(ok ? Status::Pass : Status::Fail,
            "[F_alpha] s_mu = c^eta_{nu,mu} (three routes) " + pair_str({r, n}), why);
  }
  return rep;
}

Report suite_polytopes(const Options& opt) {
  Report rep;
  rep.suite = "polytopes";
  rep.grid = opt.grid.empty() ? default_grid() : opt.grid;
  // Fixture: alpha=(2,1) at (2,4) has exactly the five subsets other than {3,4}.
  {
    const auto adm = admissible_sets(Composition({2, 1}), 2, 4);
    bool ok = adm.size() == 5;
    for (const auto& b : adm) ok = ok && !(b.elems() == std::vector<int>{3, 4});
    const auto pts = zero_one_points(
        h_description(partition_to_subset(comp_to_partition(Composition({2, 1})), 2, 4)));
    ok = ok && pts.size() == 5 && polytope_dimension(pts) == 3;
    rep.add(ok ? Status::Pass : Status::Fail,
            "(2,4) alpha=(2,1): 5 fixed points, square pyramid dimension 3");
  }
  for (auto [r, n] : rep.grid) {
    if (r < 1 || r > n) continue;
    bool four_routes = true, dims = true, recipe = true;
    std::string why;
    for (const auto& alpha : compositions_in_box(r, n)) {
      const auto adm = admissible_sets(alpha, r, n);
      const auto a_alpha = partition_to_subset(comp_to_partition(alpha), r, n);
      const auto pts = zero_one_points(h_description(a_alpha));
      const auto zig = zigzag_fixed_points(alpha, r, n);
      const auto rich = richardson_fixed_points(alpha, r, n);
      if (!(adm == pts) || !(adm == zig) || !(adm == rich)) {
        four_routes = false;
        why = "alpha=" + alpha.to_string();
      }
      if (polytope_dimension(pts) != static_cast<int>(alpha.size())) dims = false;
      const auto ext = maximal_extension(alpha, r, n);
      if (!(ext.fits_in_box(r, n)) || ext.size() != n - 1) recipe = false;
      const auto big = admissible_sets(ext, r, n);
      const std::set<RSubset> big_set(big.begin(), big.end());
      for (const auto& b : adm)
        if (!big_set.count(b)) recipe = false;
    }
    const std::string at = pair_str({r, n});
    rep.add(four_routes ? Status::Pass : Status::Fail,
            "admissible = 0/1 points = zigzag = Richardson " + at, why);
    rep.add(dims ? Status::Pass : Status::Fail, "polytope dimension = |alpha| " + at);
    rep.add(recipe ? Status::Pass : Status::Fail, "maximal extension recipe " + at);
    const long long expect_components = [&] {
      long long b = 1;
      for (int i = 1; i <= r - 1; ++i) b = b * (n - 2 - i + 1) / i;
      return n >= 2 ? b : 1;
    }();
    rep.add(static_cast<long long>(components(r, n).size()) == expect_components
                ? Status::Pass
                : Status::Fail,
            "component count C(n-2, r-1) " + at);
  }
  return rep;
}

} // namespace

std::vector<std::string> suite_names() {
  return {"bijections", "edges",        "bruhat", "paving",    "pluecker",
          "presentations", "gkm",       "ribbon", "polytopes", "all"};
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  if (name == "bijections") rep = suite_bijections(opt);
  else if (name == "edges") rep = suite_edges(opt);
  else if (name == "bruhat") rep = suite_bruhat(opt);
  else if (name == "paving") rep = suite_paving(opt);
  else if (name == "pluecker") rep = suite_pluecker(opt);
  else if (name == "presentations") rep = suite_presentations(opt);
  else if (name == "gkm") rep = suite_gkm(opt);
  else if (name == "ribbon") rep = suite_ribbon(opt);
  else if (name == "polytopes") rep = suite_polytopes(opt);
  else if (name == "all") {
    rep.suite = "all";
    rep.grid = opt.grid;
    for (const auto& sub : suite_names()) {
      if (sub == "all") continue;
      const Report r = run_suite(sub, opt);
      for (const auto& c : r.checks) rep.checks.push_back({sub + ": " + c.name, c.status, c.detail});
    }
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  rep.seed = opt.seed;
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

} // namespace qgr::verify
