#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "c2lab/error.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/graph_families.hpp"

using namespace c2lab;

namespace {

std::vector<Graph> quartic_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 5; n <= max_n; ++n) {
    std::ifstream in(std::string(C2LAB_TEST_DATA) + "/quartic_" + std::to_string(n) + ".g6");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) out.push_back(parse_graph6(line));
    }
  }
  return out;
}

std::size_t common_neighbours(const Graph& g, Vertex v, Vertex w) {
  auto a = g.neighbours(v);
  auto b = g.neighbours(w);
  std::vector<Vertex> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size();
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("graph6 parsing") {
    const auto k5 = parse_graph6("D~{");
    CHECK(k5.num_vertices() == 5);
    CHECK(k5.num_edges() == 10);
    CHECK(k5 == families::complete(5));

    const auto k4 = parse_graph6("C~");
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);

    CHECK_THROWS_AS(parse_graph6("D~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D~{\x7f"), ParseError);
    try {
      parse_graph6("D~");
    } catch (const ParseError& e) {
      CHECK(e.offset() >= 1);
    }
  }

  TEST_CASE("graph6 round trip") {
    for (const char* s : {"D~{", "C~", "E}lw", "F}oxw", "G}hPW{"}) {
      CHECK(emit_graph6(parse_graph6(s)) == s);
    }
    for (const auto& g : quartic_corpus(8)) CHECK(parse_graph6(emit_graph6(g)) == g);
  }

  TEST_CASE("edge list parsing") {
    const auto c3 = parse_edge_list(std::string_view(R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})"));
    CHECK(c3.num_vertices() == 3);
    CHECK(c3.num_edges() == 3);
    CHECK(c3.loop_number() == 1);

    const auto doubled = parse_edge_list(std::string_view(R"({"n":2,"edges":[[0,1],[0,1]]})"));
    CHECK(doubled.num_edges() == 2);
    CHECK_FALSE(doubled.is_simple());
    CHECK(doubled.edge(0) == doubled.edge(1));

    CHECK_THROWS_AS(parse_edge_list(std::string_view(R"({"n":2,"edges":[[0,5]]})")), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list(std::string_view(R"({"n":-1,"edges":[]})")), InvalidInput);
    CHECK_THROWS_AS(parse_edge_list(std::string_view(R"({"n":2,"edges":)")), ParseError);

    CHECK(parse_edge_list(emit_edge_list(doubled)) == doubled);
  }

  TEST_CASE("decompletion") {
    const auto k5 = decomplete(families::complete(5), 2);
    CHECK(k5.graph.num_vertices() == 4);
    CHECK(k5.graph.num_edges() == 6);
    CHECK(k5.graph.is_regular(3));

    const auto oct = decomplete(families::octahedron(), 0);
    CHECK(oct.graph.num_vertices() == 5);
    CHECK(oct.graph.num_edges() == 8);

    const auto c3 = decomplete(families::cycle(3), 0);
    CHECK(c3.graph.num_vertices() == 2);
    CHECK(c3.graph.num_edges() == 1);

    CHECK_THROWS_AS(decomplete(families::cycle(3), 3), InvalidInput);
  }

  TEST_CASE("decompletion maps edges back") {
    const auto g = families::circulant(7, {1, 2});
    const auto d = decomplete(g, 3);
    for (EdgeId e = 0; e < d.graph.num_edges(); ++e) {
      const auto& ne = d.graph.edge(e);
      const auto& oe = g.edge(d.new_to_old_edge[e]);
      CHECK(d.new_to_old_vertex[ne.u] == oe.u);
      CHECK(d.new_to_old_vertex[ne.v] == oe.v);
    }
    CHECK_FALSE(d.old_to_new_vertex[3].has_value());
  }

  TEST_CASE("decompletions of quartic graphs") {
    for (const auto& g : quartic_corpus(8)) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto d = decomplete(g, v).graph;
        std::size_t three = 0;
        for (Vertex x = 0; x < d.num_vertices(); ++x) {
          if (d.degree(x) == 3) {
            ++three;
          } else {
            CHECK(d.degree(x) == 4);
          }
        }
        CHECK(three == 4);
        CHECK(d.loop_number() == g.loop_number() - 3);
      }
    }
  }

  TEST_CASE("pair classification examples") {
    CHECK(classify_adjacent_pair(families::complete(5), 0, 1).kind == PairCase::AllShared);
    const auto oct = families::octahedron();
    const auto e = oct.edge(0);
    CHECK(classify_adjacent_pair(oct, e.u, e.v).kind == PairCase::T);
    const auto q4 = families::hypercube(4);
    CHECK(classify_adjacent_pair(q4, q4.edge(0).u, q4.edge(0).v).kind == PairCase::R);

    const auto c7 = families::circulant(7, {1, 2});
    const auto s = classify_adjacent_pair(c7, 0, 2);
    CHECK(s.kind == PairCase::S);
    CHECK(s.label('c') == 1);
    CHECK(s.marked.size() == 5);
  }

  TEST_CASE("pair classification agrees with neighbour intersection") {
    for (const auto& g : quartic_corpus(8)) {
      for (const auto& e : g.edges()) {
        const auto label = classify_adjacent_pair(g, e.u, e.v);
        const std::size_t common = common_neighbours(g, e.u, e.v);
        const PairCase expected[] = {PairCase::R, PairCase::S, PairCase::T, PairCase::AllShared};
        CHECK(label.kind == expected[common]);
        CHECK(label.marked.size() == (common == 3 ? 3 : 6 - common));
      }
    }
  }

  TEST_CASE("figure labelling conventions") {
    const auto c7 = families::circulant(7, {1, 2});
    const auto s = classify_adjacent_pair(c7, 0, 2);
    // w ~ {a,b,c,v}, v ~ {c,d,e,w}
    for (char x : {'a', 'b', 'c'}) CHECK(c7.adjacent(s.w, s.label(x)));
    for (char x : {'c', 'd', 'e'}) CHECK(c7.adjacent(s.v, s.label(x)));
    CHECK(s.label('a') < s.label('b'));
    CHECK(s.label('d') < s.label('e'));

    const auto oct = families::octahedron();
    const auto e = oct.edge(0);
    const auto t = classify_adjacent_pair(oct, e.u, e.v);
    for (char x : {'a', 'b', 'c'}) CHECK(oct.adjacent(t.w, t.label(x)));
    for (char x : {'b', 'c', 'd'}) CHECK(oct.adjacent(t.v, t.label(x)));
    CHECK_FALSE(oct.adjacent(t.v, t.label('a')));
    CHECK_FALSE(oct.adjacent(t.w, t.label('d')));
  }

  TEST_CASE("pair classification errors") {
    CHECK_THROWS_AS(classify_adjacent_pair(families::cycle(5), 0, 1), InvalidInput);
    const auto c8 = families::circulant(8, {1, 2});
    CHECK_THROWS_AS(classify_adjacent_pair(c8, 0, 4), InvalidInput);
  }

  TEST_CASE("split pair keeps labels") {
    const auto q4 = families::hypercube(4);
    const auto e = q4.edge(0);
    const auto r = split_adjacent_pair(q4, e.u, e.v);
    CHECK(r.graph.num_vertices() == 14);
    CHECK(r.graph.num_edges() == 25);
    for (std::size_t i = 0; i < r.marked.size(); ++i) {
      CHECK(r.new_to_old_vertex[r.marked[i]] == r.label.marked[i]);
      CHECK(r.graph.degree(r.marked[i]) == 3);
    }
  }

  TEST_CASE("deletion and contraction") {
    const auto k4 = families::complete(4);
    const auto del = delete_edge(k4, 0);
    CHECK(del.num_edges() == 5);
    const auto con = contract_edge(k4, 0);
    CHECK(con.num_vertices() == 3);
    CHECK(con.num_edges() == 5);
    CHECK_FALSE(con.is_simple());
    const Graph loop(1, {{0, 0}});
    CHECK_THROWS_AS(contract_edge(loop, 0), InvalidInput);
  }
}
