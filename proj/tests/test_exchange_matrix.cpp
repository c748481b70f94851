#include "camut/exchange_matrix.hpp"

#include "camut/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace camut;

namespace {

ExchangeMatrix mk(IntGrid g) { return ExchangeMatrix::make(std::move(g)); }

IntGrid grid(std::initializer_list<std::initializer_list<int>> rows) {
  IntGrid g;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (int v : r) row.emplace_back(v);
    g.push_back(std::move(row));
  }
  return g;
}

}  // namespace

TEST_CASE("common sign") {
  CHECK(common_sign(Int(3), Int(5)) == 1);
  CHECK(common_sign(Int(-2), Int(-7)) == -1);
  CHECK(common_sign(Int(3), Int(-1)) == 0);
  CHECK(common_sign(Int(0), Int(4)) == 1);
  CHECK(common_sign(Int(0), Int(0)) == 0);
  CHECK(common_sign(Int(-5), Int(0)) == -1);
}

TEST_CASE("find_symmetrizer on the B2 matrix") {
  auto s = find_symmetrizer(grid({{0, 1}, {-2, 0}}));
  REQUIRE(s.has_value());
  CHECK(s->diag == std::vector<Int>{1, 2});
}

TEST_CASE("find_symmetrizer sign obstruction") {
  CHECK_FALSE(find_symmetrizer(grid({{0, 1}, {1, 0}})).has_value());
  CHECK_FALSE(find_symmetrizer(grid({{0, 1}, {0, 0}})).has_value());  // mixed zero pattern
  CHECK_FALSE(find_symmetrizer(grid({{1}})).has_value());             // nonzero diagonal
}

TEST_CASE("skew-symmetric matrices get the all-ones symmetrizer") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + int(rng() % 4);
    IntGrid g(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int v = int(rng() % 7) - 3;
        g[i][j] = v;
        g[j][i] = -v;
      }
    auto s = find_symmetrizer(g);
    REQUIRE(s.has_value());
    CHECK(s->diag == std::vector<Int>(n, Int(1)));
  }
}

TEST_CASE("symmetrizer is minimal per connected component") {
  // Two components: a (1,2)-valued edge and an isolated point.
  auto s = find_symmetrizer(grid({{0, 1, 0}, {-2, 0, 0}, {0, 0, 0}}));
  REQUIRE(s.has_value());
  CHECK(s->diag == std::vector<Int>{1, 2, 1});
}

TEST_CASE("mutation negates row and column k") {
  ExchangeMatrix b = mk(grid({{0, 1}, {-2, 0}}));
  CHECK(mutate_matrix(b, 1).grid() == grid({{0, -1}, {2, 0}}));
}

TEST_CASE("A3 mutation at the middle vertex") {
  ExchangeMatrix b = mk(grid({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  CHECK(mutate_matrix(b, 2).grid() == grid({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST_CASE("mutation is involutive on the G2 matrix") {
  ExchangeMatrix b = mk(grid({{0, 1}, {-3, 0}}));
  CHECK(mutate_matrix(mutate_matrix(b, 1), 1) == b);
}

TEST_CASE("mutation of frozen rows follows the same rule") {
  ExchangeMatrix b = mk(grid({{0}, {1}}));
  ExchangeMatrix b1 = mutate_matrix(b, 1);
  CHECK(b1.grid() == grid({{0}, {-1}}));
  CHECK(mutate_matrix(b1, 1) == b);
}

TEST_CASE("out-of-range directions are rejected") {
  ExchangeMatrix b = mk(grid({{0, 1}, {-1, 0}}));
  CHECK_THROWS_AS(mutate_matrix(b, 0), precondition_error);
  CHECK_THROWS_AS(mutate_matrix(b, 3), precondition_error);
}

TEST_CASE("non-skew-symmetrizable grids are rejected") {
  CHECK_THROWS_AS(mk(grid({{0, 1}, {1, 0}})), precondition_error);
  CHECK_THROWS_AS(mk(grid({{0, 1, 0}, {-1, 0, 1}})), precondition_error);  // m < n
}

TEST_CASE("agreement with the classical mutation formula on random instances") {
  std::mt19937 rng(20240811);
  for (int t = 0; t < 10000; ++t) {
    int n = 2 + int(rng() % 5);
    int extra = int(rng() % 3);
    IntGrid g = test::random_skew_symmetrizable(rng, n, extra);
    ExchangeMatrix b = mk(g);
    int k = test::random_direction(rng, n);
    CHECK(mutate_matrix(b, k).grid() == test::classical_mutate(g, k - 1));
  }
}

TEST_CASE("involutivity and symmetrizer invariance on random instances") {
  std::mt19937 rng(99);
  for (int t = 0; t < 2000; ++t) {
    int n = 2 + int(rng() % 5);
    IntGrid g = test::random_skew_symmetrizable(rng, n, int(rng() % 2));
    ExchangeMatrix b = mk(g);
    int k = test::random_direction(rng, n);
    ExchangeMatrix b1 = mutate_matrix(b, k);
    CHECK(mutate_matrix(b1, k) == b);
    // Any symmetrizer of b symmetrizes the mutated principal part.
    IntGrid principal(b1.grid().begin(), b1.grid().begin() + n);
    CHECK(symmetrizes(principal, b.symmetrizer()));
    // Sign consistency of the result.
    for (int i = 0; i < n; ++i) {
      CHECK(b1.at(i, i) == 0);
      for (int j = 0; j < n; ++j) CHECK(b1.at(i, j) * b1.at(j, i) <= 0);
    }
  }
}

TEST_CASE("entries stay exact under deep mutation") {
  // Kronecker-type growth: entries become astronomically large; arbitrary
  // precision must track them exactly.
  ExchangeMatrix b = mk(grid({{0, 3}, {-3, 0}}));
  for (int step = 0; step < 60; ++step) b = mutate_matrix(b, 1 + step % 2);
  CHECK(abs(b.at(0, 1)) > Int("100000000000000"));
  for (int step = 60; step > 0; --step) b = mutate_matrix(b, 1 + (step - 1) % 2);
  CHECK(b == mk(grid({{0, 3}, {-3, 0}})));
}

TEST_CASE("permute_mutable conjugates the principal part") {
  ExchangeMatrix b = mk(grid({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {2, 0, -1}}));
  ExchangeMatrix p = b.permute_mutable({2, 0, 1});
  CHECK(p.at(0, 1) == b.at(2, 0));
  CHECK(p.at(3, 0) == b.at(3, 2));  // frozen row keeps its place
  ExchangeMatrix back = p.permute_mutable({1, 2, 0});
  CHECK(back == b);
}
