#include <doctest.h>

#include <random>

#include "c2lab/error.hpp"
#include "c2lab/graph_families.hpp"
#include "c2lab/polynomials.hpp"
#include "oracles.hpp"

using namespace c2lab;

namespace {

std::vector<Graph> sample_graphs() {
  return {families::cycle(3),
          families::complete(4),
          families::complete(5),
          families::wheel(4),
          families::complete_bipartite(2, 3),
          families::prism(3),
          decomplete(families::octahedron(), 0).graph,
          Graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 2}}),
          Graph(2, {{0, 1}, {0, 1}, {0, 1}})};
}

std::vector<Residue> random_point(std::mt19937_64& rng, const PrimeField& f, std::size_t n) {
  std::vector<Residue> x(n);
  for (auto& v : x) v = static_cast<Residue>(rng() % f.prime());
  return x;
}

std::vector<std::uint64_t> widen(const std::vector<Residue>& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST_SUITE("polynomials") {
  TEST_CASE("Kirchhoff polynomial against explicit tree sums") {
    std::mt19937_64 rng(3);
    for (const auto& g : sample_graphs()) {
      const auto trees = oracle::spanning_trees(g);
      for (std::uint32_t p : {2U, 3U, 101U, 1'000'003U}) {
        const PrimeField f(p);
        for (int k = 0; k < 5; ++k) {
          const auto x = random_point(rng, f, g.num_edges());
          const auto expected = oracle::complement_sum(trees, widen(x), p);
          CHECK(eval_kirchhoff(g, {f, x}) == expected);
          CHECK(eval_kirchhoff_by_trees(g, {f, x}) == expected);
          CHECK(PolynomialHandle::kirchhoff(g).evaluate({f, x}) == expected);
        }
      }
    }
  }

  TEST_CASE("Kirchhoff polynomial does not depend on orientation") {
    const auto g = families::wheel(5);
    const PrimeField f(65'537);
    std::mt19937_64 rng(9);
    const auto x = random_point(rng, f, g.num_edges());
    Orientation o;
    o.edge_rank.resize(g.num_edges());
    std::iota(o.edge_rank.rbegin(), o.edge_rank.rend(), 0U);
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
      o.removed_vertex = r;
      CHECK(eval_kirchhoff(g, {f, x}, o) == eval_kirchhoff(g, {f, x}));
    }
  }

  TEST_CASE("Kirchhoff input checks") {
    const PrimeField f(5);
    CHECK_THROWS_AS(eval_kirchhoff(Graph(3, {{0, 1}}), {f, {1}}), InvalidInput);
    CHECK_THROWS_AS(eval_kirchhoff(families::cycle(3), {f, {1, 2}}), InvalidInput);
    CHECK_THROWS_AS(eval_kirchhoff(families::cycle(3), {f, {1, 2, 7}}), InvalidInput);
  }

  TEST_CASE("diagonal Dodgsons are deletion and contraction") {
    std::mt19937_64 rng(17);
    const PrimeField f(1'000'003);
    for (const auto& g : sample_graphs()) {
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.edge(e).is_loop()) continue;
        const auto x = random_point(rng, f, g.num_edges());
        auto rest = x;
        rest.erase(rest.begin() + e);
        const EdgeId one[] = {e};
        const auto del = delete_edge(g, e);
        const auto con = contract_edge(g, e);
        const auto del_expected =
            del.is_connected() ? oracle::complement_sum(oracle::spanning_trees(del), widen(rest), f.prime()) : 0;
        CHECK(eval_dodgson(g, one, one, {}, {f, x}) == del_expected);
        CHECK(eval_dodgson(g, {}, {}, one, {f, x}) ==
              oracle::complement_sum(oracle::spanning_trees(con), widen(rest), f.prime()));
      }
    }
  }

  TEST_CASE("Dodgson with unequal row and column counts vanishes") {
    const auto g = families::complete(4);
    const PrimeField f(7);
    const EdgeId rows[] = {0, 1};
    const EdgeId cols[] = {2};
    CHECK(eval_dodgson(g, rows, cols, {}, {f, std::vector<Residue>(6, 3)}) == 0);
  }

  TEST_CASE("Dodgson variables") {
    const auto g = families::complete(4);
    const auto h = PolynomialHandle::dodgson(g, {0}, {1}, {2});
    CHECK(h.kind() == PolynomialHandle::Kind::Dodgson);
    CHECK(h.variable_list() == std::vector<EdgeId>{3, 4, 5});
    CHECK(PolynomialHandle::kirchhoff(g).variables().size() == 6);
  }

  TEST_CASE("spanning forest polynomial against explicit forest sums") {
    std::mt19937_64 rng(23);
    const PrimeField f(101);
    const auto g = families::prism(3);
    const VertexPartition parts[] = {{{0}, {1, 2}}, {{0, 3}, {4}}, {{0}, {5}, {2}}};
    for (const auto& parts_i : parts) {
      const auto fs = oracle::forests(g, parts_i);
      for (int k = 0; k < 5; ++k) {
        const auto x = random_point(rng, f, g.num_edges());
        CHECK(eval_forest(g, parts_i, {f, x}) == oracle::complement_sum(fs, widen(x), f.prime()));
        CHECK(PolynomialHandle::spanning_forest(g, parts_i).evaluate({f, x}) ==
              oracle::complement_sum(fs, widen(x), f.prime()));
      }
    }
  }

  TEST_CASE("three-edge reduction at a 3-valent vertex") {
    const auto gm = decomplete(families::complete(5), 0).graph;
    const auto red = reduce_at_3valent(gm, 0);
    CHECK(red.u3 < red.u1);
    CHECK(red.u1 < red.u2);
    CHECK(red.deletion.graph.num_vertices() == 3);
    CHECK(red.partition.size() == 2);
    CHECK(red.partition[0].size() == 1);
    CHECK(red.partition[1].size() == 2);

    const auto other = reduce_at_3valent(gm, 0, red.u2);
    CHECK(other.u3 == red.u2);
    CHECK_THROWS_AS(reduce_at_3valent(families::complete(5), 0), InvalidInput);
  }

  TEST_CASE("Dodgson equals a forest polynomial up to one sign") {
    std::mt19937_64 rng(31);
    const PrimeField f(1'000'003);
    for (const auto& g : {decomplete(families::complete(5), 1).graph,
                          decomplete(families::octahedron(), 2).graph,
                          decomplete(families::circulant(7, {1, 2}), 0).graph}) {
      const auto u = *first_3valent_vertex(g);
      const auto red = reduce_at_3valent(g, u);
      const EdgeId r[] = {red.e1};
      const EdgeId c[] = {red.e2};
      const EdgeId z[] = {red.e3};
      const auto fs = oracle::forests(red.deletion.graph, red.partition);
      std::optional<Residue> sign;
      for (int k = 0; k < 8; ++k) {
        const auto x = random_point(rng, f, g.num_edges());
        std::vector<std::uint64_t> y(red.deletion.graph.num_edges());
        for (EdgeId e = 0; e < y.size(); ++e) y[e] = x[red.deletion.new_to_old_edge[e]];
        const auto forest = oracle::complement_sum(fs, y, f.prime());
        const auto d = eval_dodgson(g, r, c, z, {f, x});
        REQUIRE(forest != 0);
        const Residue ratio = f.mul(d, f.inv(static_cast<Residue>(forest)));
        CHECK((ratio == 1 || ratio == f.prime() - 1));
        if (sign) CHECK(*sign == ratio);
        sign = ratio;
      }
    }
  }

  TEST_CASE("denominator is the product of its two Dodgsons") {
    std::mt19937_64 rng(37);
    const PrimeField f(101);
    const auto g = decomplete(families::octahedron(), 0).graph;
    const auto red = reduce_at_3valent(g, *first_3valent_vertex(g));
    const auto d3 = denominator_D3(g, red.e1, red.e2, red.e3);
    const auto a = PolynomialHandle::dodgson(g, {red.e1, red.e3}, {red.e2, red.e3}, {});
    const auto b = PolynomialHandle::dodgson(g, {red.e1}, {red.e2}, {red.e3});
    for (int k = 0; k < 10; ++k) {
      const Assignment x(f, random_point(rng, f, g.num_edges()));
      CHECK(d3.evaluate(x) == f.mul(a.evaluate(x), b.evaluate(x)));
    }
    CHECK(d3.variable_list().size() == g.num_edges() - 3);
    CHECK_THROWS_AS(denominator_D3(g, 0, 0, 1), InvalidInput);
  }
}
