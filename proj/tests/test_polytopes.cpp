#include "doctest.h"

#include "qgrass/polytopes.hpp"

using namespace qgr;

namespace {
RSubset mk(int n, std::vector<int> e) { return RSubset(n, std::move(e)); }

std::vector<std::vector<int>> elem_lists(const std::vector<RSubset>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& a : v) out.push_back(a.elems());
  return out;
}
} // namespace

TEST_CASE("h-description fixtures") {
  // A = [r]: every coordinate forced, the single point 1^r 0^{n-r}.
  const auto p0 = h_description(RSubset::initial(5, 2));
  CHECK(zero_one_points(p0).size() == 1);
  CHECK(zero_one_points(p0)[0] == RSubset::initial(5, 2));

  // (2,4), A = {2,4} (alpha = (2,1)): square pyramid with 5 vertices.
  const auto p = h_description(mk(4, {2, 4}));
  const auto pts = zero_one_points(p);
  CHECK(pts.size() == 5);
  CHECK(polytope_dimension(pts) == 3);
  for (const auto& b : pts) CHECK(!(b.elems() == std::vector<int>{3, 4}));

  // Full-support maximal alpha: dimension n - 1.
  const auto top = h_description(mk(4, {3, 4}));
  CHECK(polytope_dimension(zero_one_points(top)) == 3);
}

TEST_CASE("interval decomposition of (2,1,4) in Comp_{4,10}") {
  const auto dec = interval_decomposition(Composition({2, 1, 4}), 4);
  REQUIRE(dec.e_intervals.size() == 2);
  CHECK(dec.e_intervals[0] == std::pair<int, int>{2, 3});
  CHECK(dec.e_intervals[1] == std::pair<int, int>{4, 4});
  CHECK(dec.d_intervals[1] == std::pair<int, int>{5, 7}); // D_2 left of D_1
  CHECK(dec.d_intervals[0] == std::pair<int, int>{8, 9});
}

TEST_CASE("admissible sets: worked examples") {
  const auto adm = admissible_sets(Composition({2, 1}), 2, 4);
  CHECK(elem_lists(adm) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  // B = (3,4 |_4 5,6) is (2,1,4)-inadmissible.
  CHECK(!is_admissible(Composition({2, 1, 4}), 4, mk(10, {1, 2, 5, 6})));
  // A = {1,3,7,9} is admissible for its own composition.
  CHECK(is_admissible(Composition({2, 1, 4}), 4, mk(10, {1, 3, 7, 9})));
  // alpha empty: only [r].
  CHECK(admissible_sets(Composition{}, 2, 4).size() == 1);
}

TEST_CASE("four routes to the fixed points agree on the grid") {
  for (auto [r, n] :
       std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}}) {
    for (const auto& alpha : compositions_in_box(r, n)) {
      const auto adm = admissible_sets(alpha, r, n);
      const auto a_alpha = partition_to_subset(comp_to_partition(alpha), r, n);
      CHECK(adm == zero_one_points(h_description(a_alpha)));
      CHECK(adm == zigzag_fixed_points(alpha, r, n));
      CHECK(adm == richardson_fixed_points(alpha, r, n));
      CHECK(polytope_dimension(adm) == static_cast<int>(alpha.size()));
    }
  }
}

TEST_CASE("richardson data for the (4,3,1) example") {
  const Composition alpha({2, 1, 3});
  const auto [eta, nu] = ribbon_shape(alpha);
  CHECK(eta == Partition({4, 3, 3}));
  CHECK(nu == Partition({2, 2}));
  const auto x = richardson_translation(alpha, 4, 9);
  CHECK(x.oneline() == std::vector<int>{1, 6, 5, 2, 3, 4, 7, 8, 9});
  CHECK(richardson_fixed_points(alpha, 4, 9) == admissible_sets(alpha, 4, 9));
}

TEST_CASE("components") {
  CHECK(components(2, 4).size() == 2);
  CHECK(components(1, 6).size() == 1);
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 5}, {2, 6}, {3, 6}}) {
    long long binom = 1;
    for (int i = 1; i <= r - 1; ++i) binom = binom * (n - 2 - i + 1) / i;
    CHECK(static_cast<long long>(components(r, n).size()) == binom);
    for (const auto& alpha : components(r, n)) CHECK(alpha.size() == n - 1);
  }
}

TEST_CASE("maximal extension recipe") {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    const auto adm_cache = [&](const Composition& a) { return admissible_sets(a, r, n); };
    for (const auto& alpha : compositions_in_box(r, n)) {
      const auto ext = maximal_extension(alpha, r, n);
      CHECK(ext.fits_in_box(r, n));
      CHECK(ext.size() == n - 1);
      const auto small = adm_cache(alpha);
      const auto big = adm_cache(ext);
      for (const auto& b : small)
        CHECK(std::find(big.begin(), big.end(), b) != big.end());
    }
  }
}

TEST_CASE("face poset at (2,4): the two maximal cells share 4 fixed points") {
  const auto poset = face_poset(2, 4);
  const auto maximal = components(2, 4);
  REQUIRE(maximal.size() == 2);
  const auto f1 = admissible_sets(maximal[0], 2, 4);
  const auto f2 = admissible_sets(maximal[1], 2, 4);
  std::vector<RSubset> common;
  for (const auto& b : f1)
    if (std::find(f2.begin(), f2.end(), b) != f2.end()) common.push_back(b);
  CHECK(common.size() == 4);

  // Every non-maximal alpha sits below some maximal one; empty is minimum.
  const auto& els = poset.elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (els[i].size() == 3) continue;
    bool below_max = false;
    for (std::size_t j = 0; j < els.size(); ++j)
      if (els[j].size() == 3 && poset.leq[i][j]) below_max = true;
    CHECK(below_max);
    const std::size_t empty_idx =
        std::find(els.begin(), els.end(), Composition{}) - els.begin();
    CHECK(poset.leq[empty_idx][i]);
  }
  const auto dot = face_poset_dot(poset);
  CHECK(dot.find("digraph faces") == 0);
}
