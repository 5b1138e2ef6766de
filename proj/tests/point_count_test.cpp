#include <doctest.h>

#include "c2lab/error.hpp"
#include "c2lab/graph_families.hpp"
#include "c2lab/point_count.hpp"
#include "oracles.hpp"

using namespace c2lab;

TEST_SUITE("point_count") {
  TEST_CASE("zero counts against brute force") {
    const Graph graphs[] = {families::cycle(3), families::cycle(4), families::complete(4),
                            families::complete_bipartite(2, 3), families::wheel(3),
                            Graph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})};
    for (const auto& g : graphs) {
      for (std::uint32_t p : {2U, 3U}) {
        const auto expected = oracle::kirchhoff_zeros(g, p);
        CHECK(count_zeros(PolynomialHandle::kirchhoff(g), PrimeField(p)) == expected);
        CHECK(expected % (p * p) == 0);
      }
    }
  }

  TEST_CASE("forest polynomial zero counts against brute force") {
    const auto g = families::prism(3);
    const VertexPartition parts{{0}, {1, 2}};
    const auto fs = oracle::forests(g, parts);
    for (std::uint32_t p : {2U, 3U}) {
      CHECK(count_zeros(PolynomialHandle::spanning_forest(g, parts), PrimeField(p)) ==
            oracle::zero_count(fs, g.num_edges(), p));
    }
  }

  TEST_CASE("triangle") {
    for (std::uint32_t p : {2U, 3U, 5U}) {
      const auto r = c2_direct(families::cycle(3), PrimeField(p));
      CHECK(r.raw == p * p);
      CHECK(r.c2 == 1);
    }
  }

  TEST_CASE("threaded counting matches serial counting") {
    const auto g = families::wheel(5);
    const auto h = PolynomialHandle::kirchhoff(g);
    CountOptions serial;
    CountOptions threaded;
    threaded.threads = 3;
    CHECK(count_zeros(h, PrimeField(3), serial) == count_zeros(h, PrimeField(3), threaded));
  }

  TEST_CASE("budget refusal") {
    CountOptions tight;
    tight.budget = 1000;
    CHECK_THROWS_AS(c2_direct(families::complete(5), PrimeField(3), tight), BudgetExceeded);
  }

  TEST_CASE("K5 decompletion routes") {
    for (std::uint32_t p : {2U, 3U}) {
      const auto rep = compute_decompletion(families::complete(5), 0, PrimeField(p));
      REQUIRE(rep.direct);
      REQUIRE(rep.denom);
      REQUIRE(rep.partition);
      CHECK(rep.agree());
      // c2(K4) = -1 mod p; the wheel with three spokes has c2 = -1.
      CHECK(*rep.value() == p - 1);
      CHECK(rep.direct->raw == oracle::kirchhoff_zeros(families::complete(4), p));
    }
  }

  TEST_CASE("denominator route against an explicit edge choice") {
    const auto gm = decomplete(families::octahedron(), 0).graph;
    const auto red = reduce_at_3valent(gm, *first_3valent_vertex(gm));
    for (std::uint32_t p : {2U, 3U}) {
      const PrimeField f(p);
      CHECK(c2_denom(gm, red.e1, red.e2, red.e3, f).c2 == c2_direct(gm, f).c2);
      CHECK(c2_denom(gm, red.e2, red.e1, red.e3, f).c2 == c2_direct(gm, f).c2);
    }
  }

  TEST_CASE("route preconditions") {
    const PrimeField f(2);
    CHECK_THROWS_AS(c2_direct(Graph(3, {{0, 1}}), f), InvalidInput);
    CHECK_THROWS_AS(c2_denom(families::cycle(3), f), InvalidInput);
    CHECK_THROWS_AS(c2_denom(families::complete(4), 0, 0, 1, f), InvalidInput);
    CHECK_THROWS_AS(c2_partition(families::complete(4), 0, f), InvalidInput);
    CHECK_THROWS_AS(compute_decompletion(families::complete(4), 0, f), InvalidInput);
    CHECK_THROWS_AS(compute_decompletion(families::cycle(5), 0, f), InvalidInput);
  }

  TEST_CASE("report agreement") {
    C2Report r;
    r.direct = RouteResult{1, 4};
    r.denom = RouteResult{1, 3};
    CHECK(r.agree());
    CHECK(*r.value() == 1);
    r.partition = RouteResult{0, 2};
    CHECK_FALSE(r.agree());
    CHECK_FALSE(r.value());
  }
}
