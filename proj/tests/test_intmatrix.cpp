#include "doctest.h"

#include <random>

#include "qgrass/intmatrix.hpp"

using namespace qgr;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    std::vector<Int> row(r.begin(), r.end());
    m.append_row(row);
  }
  return m;
}

} // namespace

TEST_CASE("hnf: canonical form and lattice equality") {
  const auto a = from_rows({{2, 0}, {0, 2}, {1, 1}});
  const auto h = hnf(a);
  CHECK(h.rows() == 2);
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(0, 1) == 1);
  CHECK(h.at(1, 0) == 0);
  CHECK(h.at(1, 1) == 2);
  CHECK(same_row_lattice(a, from_rows({{1, 1}, {0, 2}})));
  CHECK(!same_row_lattice(a, from_rows({{1, 0}, {0, 1}})));
  CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);
}

TEST_CASE("snf diagonal") {
  CHECK(snf_diagonal(from_rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
  CHECK(snf_diagonal(from_rows({{2, 4}, {4, 8}})) == std::vector<Int>{2});
  CHECK(snf_diagonal(from_rows({{1, 0}, {0, 1}})) == std::vector<Int>{1, 1});
  // Random invariance: SNF of M equals SNF of row/col-shuffled M.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = static_cast<long long>(rng() % 9) - 4;
    IntMatrix p(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) p.at(i, j) = m.at(3 - i, j);
    CHECK(snf_diagonal(m) == snf_diagonal(p));
  }
}

TEST_CASE("sparse rational solve") {
  SparseLinearSystem sys(3);
  sys.add_row({{0, 1}, {1, 1}}, 3);  // x + y = 3
  sys.add_row({{1, 1}, {2, -1}}, 1); // y - z = 1
  const auto sol = sys.solve();
  REQUIRE(sol.has_value());
  CHECK(sol->kernel.size() == 1);
  // Verify the particular solution satisfies the rows.
  CHECK(sol->particular[0] + sol->particular[1] == 3);
  CHECK(sol->particular[1] - sol->particular[2] == 1);
  // And the kernel vector annihilates them.
  const auto& k = sol->kernel[0];
  CHECK(k[0] + k[1] == 0);
  CHECK(k[1] - k[2] == 0);

  SparseLinearSystem bad(2);
  bad.add_row({{0, 1}}, 1);
  bad.add_row({{0, 1}}, 2);
  CHECK(!bad.solve().has_value());
}

TEST_CASE("integer solve via column hnf") {
  // 2x = 4 has integer solution; 2x = 3 does not.
  {
    const auto x = solve_integer(from_rows({{2}}), {Int(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
  }
  CHECK(!solve_integer(from_rows({{2}}), {Int(3)}).has_value());
  {
    // x + 2y = 1, 3x + 4y = 5 -> x = 3, y = -1.
    const auto x = solve_integer(from_rows({{1, 2}, {3, 4}}), {Int(1), Int(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == -1);
  }
  // Random consistency: build b = A * known integer x, recover some solution.
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) a.at(i, j) = static_cast<long long>(rng() % 7) - 3;
    std::vector<Int> x0(4);
    for (auto& v : x0) v = static_cast<long long>(rng() % 9) - 4;
    std::vector<Int> b(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) b[i] += a.at(i, j) * x0[j];
    const auto x = solve_integer(a, b);
    REQUIRE(x.has_value());
    for (int i = 0; i < 3; ++i) {
      Int acc = 0;
      for (int j = 0; j < 4; ++j) acc += a.at(i, j) * (*x)[j];
      CHECK(acc == b[i]);
    }
  }
}
