// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "c2lab/edge_partitions.hpp"
#include "c2lab/graph_families.hpp"
#include "c2lab/involutions.hpp"
#include "c2lab/point_count.hpp"
#include "oracles.hpp"
#include "verify.hpp"

using namespace c2lab;

namespace {

std::string data(const std::string& name) { return std::string(C2LAB_TEST_DATA) + "/" + name; }

std::vector<verify::CorpusEntry> quartics(std::size_t max_n) {
  std::vector<verify::CorpusEntry> out;
  for (std::size_t n = 5; n <= max_n; ++n) {
    auto c = verify::load_corpus(data("quartic_" + std::to_string(n) + ".g6"));
    for (auto& e : c.graphs) out.push_back(std::move(e));
  }
  return out;
}

Graph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(rng() % v), v});
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<Vertex>(rng() % n);
    auto v = static_cast<Vertex>(rng() % n);
    if (u == v) v = static_cast<Vertex>((v + 1) % n);
    edges.push_back({u, v});
  }
  return Graph(n, edges);
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome divisibility() {
  std::vector<Graph> set = {families::cycle(3),           families::cycle(6),
                            families::complete(4),        families::wheel(3),
                            families::wheel(4),           families::wheel(5),
                            families::wheel(6),           families::complete_bipartite(2, 3),
                            families::complete_bipartite(3, 3), families::complete_bipartite(3, 4),
                            families::prism(3),           families::prism(4),
                            families::hypercube(3),       families::path(4),
                            decomplete(families::complete(5), 0).graph,
                            decomplete(families::octahedron(), 0).graph};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 3 + rng() % 4;
    set.push_back(random_multigraph(rng, n, rng() % (13 - n)));
  }
  Outcome o;
  std::size_t checked = 0;
  std::size_t oracle_checked = 0;
  for (const auto& g : set) {
    if (!g.is_connected() || g.num_edges() > 12) {
      o.pass = false;
      o.detail += " bad test graph;";
      continue;
    }
    for (std::uint32_t p : {2U, 3U}) {
      const auto zeros = count_zeros(PolynomialHandle::kirchhoff(g), PrimeField(p));
      if (zeros % (p * p) != 0) {
        o.pass = false;
        o.detail += " " + emit_edge_list(g).dump() + " p=" + std::to_string(p) + ";";
      }
      if (g.num_edges() <= 9) {
        ++oracle_checked;
        if (oracle::kirchhoff_zeros(g, p) != zeros) {
          o.pass = false;
          o.detail += " oracle mismatch " + emit_edge_list(g).dump() + ";";
        }
      }
    }
    ++checked;
  }
  if (checked < 20) o.pass = false;
  o.detail = std::to_string(checked) + " graphs, " + std::to_string(oracle_checked) +
             " brute-force cross-checks" + o.detail;
  return o;
}

Outcome route_agreement() {
  Outcome o;
  std::size_t reports = 0;
  auto check = [&](const std::string& id, const Graph& g, std::uint32_t p) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto r = compute_decompletion(g, v, PrimeField(p), {}, {}, id);
      ++reports;
      if (!r.direct || !r.denom || !r.partition || !r.agree()) {
        o.pass = false;
        o.detail += " " + id + " v=" + std::to_string(v) + " p=" + std::to_string(p) + ";";
      }
    }
  };
  for (const auto& e : quartics(7)) check(e.id, e.graph, 2);
  check("K5", families::complete(5), 3);
  o.detail = std::to_string(reports) + " decompletions, three routes each" + o.detail;
  return o;
}

Outcome completion() {
  verify::Corpus corpus;
  corpus.graphs = quartics(8);
  const auto rep = verify::verify_completion(corpus, {2}, {}, {});
  Outcome o;
  const std::size_t expected_graphs = 1 + 1 + 2 + 6;
  o.pass = corpus.graphs.size() == expected_graphs && rep.entries.size() == expected_graphs &&
           !rep.violations() && !rep.budget_refusals();
  for (const auto& e : rep.entries) {
    if (!e.verdict || e.skipped) {
      o.pass = false;
      o.detail += " " + e.graph_id + ";";
    }
  }
  o.detail = std::to_string(rep.entries.size()) + " graphs" + o.detail;
  return o;
}

Outcome t_case() {
  std::vector<verify::CorpusEntry> graphs = {{"octahedron", families::octahedron()},
                                             {"C7(1,2)", families::circulant(7, {1, 2})},
                                             {"C8(1,2)", families::circulant(8, {1, 2})}};
  for (auto& e : quartics(7)) {
    if (e.graph.num_vertices() == 7) graphs.push_back(std::move(e));
  }
  Outcome o;
  const PrimeField f(3);
  std::size_t pairs = 0;
  std::size_t graphs_with_pairs = 0;
  bool octahedron_done = false;
  for (const auto& [id, g] : graphs) {
    std::size_t here = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Vertex v = g.edge(e).u;
      const Vertex w = g.edge(e).v;
      if (classify_adjacent_pair(g, v, w).kind != PairCase::T) continue;
      ++here;
      const auto cv = c2_direct(decomplete(g, v).graph, f).c2;
      const auto cw = c2_direct(decomplete(g, w).graph, f).c2;
      const auto t = split_adjacent_pair(g, v, w);
      const auto rep = t_case_counts(t, 3);
      bool ok = cv == cw && rep.all_hold() && rep.c2_v == cv && rep.c2_w == cw;
      for (std::size_t l = 1; l <= 2; ++l) {
        const std::string tail = "^" + std::to_string(l) + ",Q^" + std::to_string(2 - l) + "]";
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        for (const auto& c : rep.counts) {
          if (c.label == "t[P" + tail) a = c.count;
          if (c.label == "t[P'" + tail) b = c.count;
        }
        ok = ok && a % 3 == b % 3;
      }
      if (!ok) {
        o.pass = false;
        o.detail += " " + id + " " + std::to_string(v) + "-" + std::to_string(w) + ";";
      }
    }
    pairs += here;
    if (here > 0) ++graphs_with_pairs;
    if (id == "octahedron" && here > 0) octahedron_done = true;
  }
  if (!octahedron_done || graphs_with_pairs < 3) o.pass = false;
  o.detail = std::to_string(pairs) + " T pairs on " + std::to_string(graphs_with_pairs) + " graphs" + o.detail;
  return o;
}

Outcome involutions() {
  Outcome o;
  const auto s = split_adjacent_pair(families::circulant(7, {1, 2}), 0, 2);
  const auto r = split_adjacent_pair(families::hypercube(4), 0, 1);
  if (s.label.kind != PairCase::S || r.label.kind != PairCase::R) return {false, "wrong pair cases"};
  const std::vector<SweepReport> sweeps = {sweep_s_swap_c(s), sweep_s_bijection(s),
                                           sweep_s_bijection_variant(s), sweep_r_control_bijection(r),
                                           sweep_r_bijection(r)};
  for (const auto& rep : sweeps) {
    o.detail += " " + rep.name + ":" + std::to_string(rep.domain_size);
    if (!rep.ok() || rep.domain_size == 0) {
      o.pass = false;
      o.detail += "(violations " + std::to_string(rep.violations()) + ")";
    }
  }
  if (!s_case_counts(s).all_hold() || !r_case_counts(r).all_hold()) {
    o.pass = false;
    o.detail += " parity identities fail";
  }
  return o;
}

Outcome orbits() {
  const auto oct = families::octahedron();
  std::optional<PairGraph> t;
  for (EdgeId e = 0; e < oct.num_edges() && !t; ++e) {
    if (classify_adjacent_pair(oct, oct.edge(e).u, oct.edge(e).v).kind == PairCase::T) {
      t = split_adjacent_pair(oct, oct.edge(e).u, oct.edge(e).v);
    }
  }
  if (!t) return {false, "no T pair"};
  Outcome o;
  std::uint64_t orbit_count = 0;
  const char* specs[] = {"a|bcd", "d|abc", "ad|bc"};
  for (const char* first : specs) {
    for (const char* second : specs) {
      const std::vector<VertexPartition> parts = {partition_from_labels(*t, first),
                                                  partition_from_labels(*t, second)};
      const auto rep = sweep_orbits(t->graph, parts, 0, t->marked_label('b'));
      orbit_count += rep.orbits;
      bool ok = rep.ok() && (rep.size_first + rep.size_second) % 3 == 0;
      for (const auto& [size, n] : rep.orbit_sizes) ok = ok && size == 3;
      if (!ok) {
        o.pass = false;
        o.detail += std::string(" ") + first + "/" + second + ";";
      }
    }
  }
  if (orbit_count == 0) o.pass = false;
  o.detail = std::to_string(orbit_count) + " orbits over 9 tuple classes" + o.detail;
  return o;
}

Outcome identities() {
  const auto rep = verify::check_identities(20241019, 200);
  Outcome o;
  o.pass = rep.ok() && rep.checks.size() == 5;
  for (const auto& c : rep.checks) {
    o.detail += " " + c.name + ":" + std::to_string(c.cases) + "/" + std::to_string(c.failures);
    if (c.name.find("Chevalley") != std::string::npos && c.cases < 100) o.pass = false;
  }
  return o;
}

Outcome triangle() {
  Outcome o;
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto r = c2_direct(families::cycle(3), PrimeField(p));
    if (r.raw != p * p || r.c2 != 1) o.pass = false;
    o.detail += " p=" + std::to_string(p) + ":" + std::to_string(r.raw);
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"divisibility", divisibility}, {"route agreement", route_agreement},
      {"completion at p=2", completion}, {"T-case at p=3", t_case},
      {"involution sweeps", involutions}, {"orbit structure", orbits},
      {"polynomial identities", identities}, {"triangle", triangle}};
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", index, name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
