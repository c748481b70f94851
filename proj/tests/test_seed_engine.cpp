#include "camut/seed.hpp"

#include "camut/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <cstdlib>
#include <random>

using namespace camut;

namespace {

IntGrid grid(std::initializer_list<std::initializer_list<int>> rows) {
  IntGrid g;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (int v : r) row.emplace_back(v);
    g.push_back(std::move(row));
  }
  return g;
}

ExchangeMatrix a2() { return ExchangeMatrix::make(grid({{0, 1}, {-1, 0}})); }
ExchangeMatrix b2() { return ExchangeMatrix::make(grid({{0, 1}, {-2, 0}})); }
ExchangeMatrix g2() { return ExchangeMatrix::make(grid({{0, 1}, {-3, 0}})); }

LaurentPoly up(const std::string& text, int m) { return LaurentPoly::parse(text, m); }

}  // namespace

TEST_CASE("initial seed holds the initial monomials") {
  Seed s = initial_seed(a2());
  CHECK(s.cluster[0] == up("u1", 2));
  CHECK(s.cluster[1] == up("u2", 2));

  Seed t = initial_seed(ExchangeMatrix::make(grid({{0, 1}, {-1, 0}, {1, 1}})));
  CHECK(t.n() == 2);
  CHECK(t.m() == 3);
  CHECK(t.cluster[0] == up("u1", 3));

  CHECK_THROWS_AS(initial_seed(a2(), {1}), precondition_error);
  CHECK_THROWS_AS(initial_seed(a2(), {3}), precondition_error);
}

TEST_CASE("the exchange relation on A2") {
  Seed s = initial_seed(a2());
  Seed s1 = mutate_seed(s, 1);
  CHECK(s1.cluster[0] == up("u2*u1^-1 + u1^-1", 2));
  CHECK(s1.cluster[1] == up("u2", 2));
  CHECK(s1.matrix == mutate_matrix(a2(), 1));
}

TEST_CASE("frozen variables enter the exchange products") {
  Seed s = initial_seed(ExchangeMatrix::make(grid({{0}, {1}})));
  Seed s1 = mutate_seed(s, 1);
  CHECK(s1.cluster[0] == up("u2*u1^-1 + u1^-1", 2));
}

TEST_CASE("seed mutation is involutive") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + int(rng() % 3);
    ExchangeMatrix b = ExchangeMatrix::make(test::random_skew_symmetrizable(rng, n, int(rng() % 2)));
    Seed s = initial_seed(b);
    // walk a little first so the cluster is not monomial
    for (int w = 0; w < 3; ++w) s = mutate_seed(s, test::random_direction(rng, n));
    int k = test::random_direction(rng, n);
    CHECK(mutate_seed(mutate_seed(s, k), k) == s);
  }
}

TEST_CASE("canonical form sorts the cluster and is idempotent") {
  Seed s = initial_seed(a2());
  Seed walked = mutate_seed(s, 1);
  CanonicalSeed c = canonical_form(walked);
  for (size_t i = 1; i < c.seed.cluster.size(); ++i)
    CHECK(LaurentPoly::compare(c.seed.cluster[i - 1], c.seed.cluster[i]) < 0);
  CanonicalSeed c2 = canonical_form(c.seed);
  CHECK(c2.key == c.key);
  CHECK(c2.hash == c.hash);
  CHECK(c2.seed == c.seed);
}

TEST_CASE("the A2 pentagon closes after five alternating mutations") {
  Seed s = initial_seed(a2());
  CanonicalSeed start = canonical_form(s);
  Seed w = s;
  int direction = 1;
  for (int step = 0; step < 5; ++step) {
    w = mutate_seed(w, direction);
    direction = 3 - direction;
    if (step < 4) CHECK(canonical_form(w).key != start.key);
  }
  CanonicalSeed end = canonical_form(w);
  CHECK(end.key == start.key);
  CHECK(end.hash == start.hash);
}

TEST_CASE("rank-2 exchange graphs: A2, B2, G2") {
  ExchangeGraph ga = explore(initial_seed(a2()), 64, 1000);
  CHECK(ga.complete);
  CHECK(ga.seed_count() == 5);
  CHECK(ga.variable_count() == 5);
  CHECK(ga.edges.size() == 5);
  // pentagon: every node meets exactly n = 2 edges
  std::vector<int> deg(5, 0);
  for (const auto& [a, b, k] : ga.edges) {
    (void)k;
    ++deg[a];
    ++deg[b];
  }
  for (int d : deg) CHECK(d == 2);

  ExchangeGraph gb = explore(initial_seed(b2()), 64, 1000);
  CHECK(gb.complete);
  CHECK(gb.seed_count() == 6);
  CHECK(gb.variable_count() == 6);

  ExchangeGraph gg = explore(initial_seed(g2()), 64, 1000);
  CHECK(gg.complete);
  CHECK(gg.seed_count() == 8);
  CHECK(gg.variable_count() == 8);
}

TEST_CASE("exploration limits are honest") {
  ExchangeGraph g = explore(initial_seed(b2()), 1, 1000);
  CHECK_FALSE(g.complete);
  CHECK(g.depth_reached == 1);
  ExchangeGraph g2 = explore(initial_seed(b2()), 64, 3);
  CHECK_FALSE(g2.complete);
  CHECK(g2.seed_count() <= 3);
  CHECK_THROWS_AS(explore(initial_seed(b2()), 0, 10), precondition_error);
}

TEST_CASE("exploration output is schedule independent") {
  ExchangeGraph base = explore(initial_seed(g2()), 64, 1000);
  setenv("CLUSTER_THREADS", "4", 1);
  ExchangeGraph threaded = explore(initial_seed(g2()), 64, 1000);
  unsetenv("CLUSTER_THREADS");
  REQUIRE(base.seed_count() == threaded.seed_count());
  for (size_t i = 0; i < base.nodes.size(); ++i)
    CHECK(base.nodes[i].key == threaded.nodes[i].key);
  CHECK(base.edges == threaded.edges);
  CHECK(base.variables == threaded.variables);
}

TEST_CASE("finite type detection") {
  FiniteTypeResult fa = is_finite_type(a2(), 100);
  REQUIRE(fa.finite());
  CHECK(*fa.variable_count == 5);

  FiniteTypeResult kr =
      is_finite_type(ExchangeMatrix::make(grid({{0, 2}, {-2, 0}})), 50);
  CHECK_FALSE(kr.finite());
  CHECK(kr.seeds_found >= 50);

  FiniteTypeResult one = is_finite_type(ExchangeMatrix::make(grid({{0}})), 10);
  REQUIRE(one.finite());
  CHECK(*one.variable_count == 2);
}

TEST_CASE("Laurent phenomenon holds through depth 6 with coefficients") {
  // A3 and B2 with one frozen row each; every div_exact must succeed.
  ExchangeMatrix a3f = ExchangeMatrix::make(grid({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
  ExchangeGraph ga = explore(initial_seed(a3f), 6, 100000);
  CHECK(ga.seed_count() > 1);

  ExchangeMatrix b2f = ExchangeMatrix::make(grid({{0, 1}, {-2, 0}, {0, 1}}));
  ExchangeGraph gb = explore(initial_seed(b2f), 6, 100000);
  CHECK(gb.seed_count() > 1);
  // Coefficients are immutable by representation: every seed stores only the
  // mutable cluster, frozen variables stay the initial monomials.
  for (const auto& node : gb.nodes) CHECK(node.seed.cluster.size() == 2);
}

TEST_CASE("inverted coefficient sets ride along unchanged") {
  ExchangeMatrix b = ExchangeMatrix::make(grid({{0, 1}, {-1, 0}, {1, -1}}));
  Seed s = initial_seed(b, {3});
  Seed w = mutate_seed(mutate_seed(s, 1), 2);
  CHECK(w.inverted == std::set<int>{3});
}

TEST_CASE("subcluster verification on the worked A3 cases") {
  ExchangeMatrix a3 = ExchangeMatrix::make(grid({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  Seed parent = initial_seed(a3);
  CHECK(verify_subcluster(parent, {1, 2}, 1, {}));
  CHECK_FALSE(verify_subcluster(parent, {2, 1}, 1, {}));
  CHECK(verify_subcluster(parent, {1, 2, 3}, 3, {}));
}

TEST_CASE("subcluster verification respects inverted coefficients") {
  ExchangeMatrix b = ExchangeMatrix::make(grid({{0, 1}, {-1, 0}, {1, 0}, {0, 1}}));
  Seed parent = initial_seed(b, {3, 4});
  // sigma keeps x1, x2 and the coefficients; dropping an inverted
  // coefficient from the sub-inverted set violates scls3.
  CHECK(verify_subcluster(parent, {1, 2, 3, 4}, 2, {3, 4}));
  CHECK_FALSE(verify_subcluster(parent, {1, 2, 3, 4}, 2, {3}));
  // A sub-seed that never carries coefficient 4 does not need it inverted,
  // but dropping coefficient 3 breaks scls2 for column 1.
  CHECK_FALSE(verify_subcluster(parent, {1, 2, 4}, 2, {4}));
}

TEST_CASE("malformed sigma is an error, not a verdict") {
  Seed parent = initial_seed(a2());
  CHECK_THROWS_AS(verify_subcluster(parent, {1, 1}, 1, {}), precondition_error);
  CHECK_THROWS_AS(verify_subcluster(parent, {5}, 1, {}), precondition_error);
  CHECK_THROWS_AS(verify_subcluster(parent, {1, 2}, 0, {}), precondition_error);
  CHECK_THROWS_AS(verify_subcluster(parent, {1, 2}, 1, {9}), precondition_error);
}
