#include "doctest.h"

#include <nlohmann/json.hpp>

#include "qgrass/serialize.hpp"

using namespace qgr;

TEST_CASE("json round trips") {
  const RSubset a(6, {2, 4, 5});
  CHECK(rsubset_from_json(to_json(a)) == a);
  CHECK(to_json(a).dump() == R"({"elems":[2,4,5],"n":6})");

  const Partition lam({3, 1});
  CHECK(partition_from_json(to_json(lam)) == lam);
  const Composition alpha({2, 1, 3});
  CHECK(composition_from_json(to_json(alpha)) == alpha);
  const Permutation w({3, 1, 2});
  CHECK(permutation_from_json(to_json(w)) == w);
  const auto nc = z_of(RSubset(4, {2, 4}));
  CHECK(nc_from_json(to_json(nc)) == nc);

  IntPolynomial f(VarSet{1, 2});
  f.add_term({2, 0, 1}, Int("123456789012345678901234567890"));
  f.add_term({0, 1, 0}, -1);
  CHECK(polynomial_from_json(to_json(f)) == f);
}

TEST_CASE("graph and polytope records") {
  const auto g = quasi_johnson_from_inversions(2, 4);
  const auto j = graph_to_json(g);
  CHECK(j.at("vertices").size() == 6);
  CHECK(j.at("edges").size() == 11);
  const auto rec = polytope_record(Composition({2, 1}), 2, 4);
  CHECK(rec.at("fixed_points").size() == 5);
  CHECK(rec.at("alpha") == nlohmann::json::array({2, 1}));
}
