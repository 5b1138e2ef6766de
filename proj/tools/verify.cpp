#include "verify.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "c2lab/dense_poly.hpp"
#include "c2lab/error.hpp"
#include "c2lab/polynomials.hpp"

namespace c2lab::verify {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxExamples = 5;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Strips the optional ">>graph6<<" header.
std::string graph6_body(std::string line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) line.erase(0, header.size());
  return line;
}

bool is_completion(const Graph& g) {
  return g.num_vertices() >= 5 && g.is_simple() && g.is_regular(4) && g.is_connected();
}

std::vector<std::pair<Vertex, Vertex>> adjacent_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Corpus load_corpus(const fs::path& path) {
  Corpus corpus;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        corpus.graphs.push_back({f.stem().string(), parse_edge_list(std::string_view(read_file(f)))});
      } catch (const Error& e) {
        corpus.warnings.push_back(f.filename().string() + ": skipped: " + e.what());
      }
    }
    return corpus;
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open corpus " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    line = graph6_body(line);
    try {
      corpus.graphs.push_back({line, parse_graph6(line)});
    } catch (const Error& e) {
      corpus.warnings.push_back(path.filename().string() + ":" + std::to_string(number) +
                                ": skipped: " + e.what());
    }
  }
  return corpus;
}

Graph load_graph(const fs::path& path) {
  const std::string text = read_file(path);
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (!doc.is_discarded()) return parse_edge_list(doc);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') return parse_graph6(graph6_body(line));
  }
  throw InvalidInput(path.string() + " holds no graph");
}

// ---------------------------------------------------------------------------

bool ComputeResult::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const VertexResult& r) { return r.report.agree(); });
}

ComputeResult compute(const std::string& id, const Graph& g, const std::vector<std::uint32_t>& primes,
                      RouteSelection routes, std::optional<Vertex> vertex, bool decompletion,
                      bool strict, const CountOptions& opts) {
  ComputeResult out;
  out.graph_id = id;
  out.mode = decompletion ? "decompletion" : "graph";
  if (vertex && *vertex >= g.num_vertices()) throw InvalidInput("vertex out of range");
  for (std::uint32_t p : primes) {
    const PrimeField field(p);
    if (decompletion) {
      std::vector<Vertex> vs;
      if (vertex) {
        vs.push_back(*vertex);
      } else {
        vs.resize(g.num_vertices());
        std::iota(vs.begin(), vs.end(), Vertex{0});
      }
      for (Vertex v : vs) {
        out.results.push_back({v, p, compute_decompletion(g, v, field, routes, opts, id)});
      }
      continue;
    }
    if (strict && routes.partition) {
      throw InvalidInput("the partition route needs a 4-regular completion");
    }
    C2Report rep;
    rep.graph_id = id;
    rep.prime = p;
    if (routes.direct) rep.direct = c2_direct(g, field, opts);
    if (routes.denom) {
      try {
        rep.denom = c2_denom(g, field, opts);
      } catch (const InvalidInput&) {
        if (strict) throw;
      }
    }
    out.results.push_back({std::nullopt, p, rep});
  }
  return out;
}

bool CompletionReport::violations() const {
  return std::any_of(entries.begin(), entries.end(), [](const CompletionEntry& e) {
    return e.error.empty() ? !e.verdict : !e.skipped && !e.budget_refused;
  });
}

bool CompletionReport::budget_refusals() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const CompletionEntry& e) { return e.budget_refused; });
}

CompletionReport verify_completion(const Corpus& corpus, const std::vector<std::uint32_t>& primes,
                                   RouteSelection routes, const CountOptions& opts) {
  CompletionReport rep;
  rep.warnings = corpus.warnings;
  for (const auto& [id, g] : corpus.graphs) {
    for (std::uint32_t p : primes) {
      CompletionEntry entry;
      entry.graph_id = id;
      entry.prime = p;
      try {
        if (!is_completion(g)) throw InvalidInput("not a connected simple 4-regular graph");
        const PrimeField field(p);
        // Vertices joined by T or all-shared pairs are covered at every prime.
        DisjointSets covered(g.num_vertices());
        for (const auto& [v, w] : adjacent_pairs(g)) {
          const auto label = classify_adjacent_pair(g, v, w);
          entry.pair_cases.push_back(std::to_string(v) + "-" + std::to_string(w) + ":" +
                                     std::string(to_string(label.kind)));
          if (label.kind == PairCase::T || label.kind == PairCase::AllShared) covered.unite(v, w);
        }
        entry.tag = p == 2 || covered.count() == 1 ? "theorem-backed" : "empirical";
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          entry.vertices.push_back(compute_decompletion(g, v, field, routes, opts, id));
        }
        const auto first = entry.vertices.front().value();
        entry.verdict = std::all_of(entry.vertices.begin(), entry.vertices.end(),
                                    [&](const C2Report& r) { return r.agree() && r.value() == first; });
      } catch (const BudgetExceeded& e) {
        entry.error = e.what();
        entry.budget_refused = true;
      } catch (const InvalidInput& e) {
        entry.error = e.what();
        entry.skipped = true;
      } catch (const Error& e) {
        entry.error = e.what();
      }
      rep.entries.push_back(std::move(entry));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool InvolutionReport::violations() const {
  for (const auto& pair : pairs) {
    if (!pair.error.empty() && !pair.budget_refused) return true;
    if (pair.counts && !pair.counts->all_hold()) return true;
    for (const auto& s : pair.sweeps) {
      if (!s.ok()) return true;
    }
    for (const auto& o : pair.orbits) {
      if (!o.ok()) return true;
    }
  }
  return false;
}

bool InvolutionReport::budget_refusals() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const PairSweep& p) { return p.budget_refused; });
}

namespace {

void sweep_pair(PairSweep& out, const Graph& g, std::uint32_t prime, std::uint64_t budget) {
  const auto pg = split_adjacent_pair(g, out.v, out.w);
  switch (pg.label.kind) {
    case PairCase::S:
      out.counts = s_case_counts(pg);
      out.sweeps = {sweep_s_swap_c(pg), sweep_s_bijection(pg), sweep_s_bijection_variant(pg)};
      break;
    case PairCase::R:
      out.counts = r_case_counts(pg);
      out.sweeps = {sweep_r_control_bijection(pg), sweep_r_bijection(pg)};
      break;
    case PairCase::T: {
      out.counts = t_case_counts(pg, prime, budget);
      const std::pair<const char*, const char*> named[] = {
          {"P", "a|bcd"}, {"P'", "d|abc"}, {"Q", "ad|bc"}};
      const Vertex b = pg.marked_label('b');
      for (const auto& [first_name, first_spec] : named) {
        for (const auto& [rest_name, rest_spec] : named) {
          std::vector<VertexPartition> parts(prime - 1, partition_from_labels(pg, rest_spec));
          parts[0] = partition_from_labels(pg, first_spec);
          out.orbits.push_back(sweep_orbits(pg.graph, parts, 0, b, budget));
          out.orbit_labels.push_back(std::string(first_name) + " then " + rest_name +
                                     ", move b in forest 1");
        }
      }
      break;
    }
    case PairCase::AllShared:
      break;
  }
}

}  // namespace

InvolutionReport sweep_involutions(const Corpus& corpus, std::uint32_t prime, std::uint64_t budget) {
  if (!is_prime(prime)) throw InvalidInput(std::to_string(prime) + " is not prime");
  InvolutionReport rep;
  rep.prime = prime;
  rep.warnings = corpus.warnings;
  const std::vector<PairCase> wanted =
      prime == 2 ? std::vector<PairCase>{PairCase::S, PairCase::R} : std::vector<PairCase>{PairCase::T};
  for (const auto& [id, g] : corpus.graphs) {
    if (!is_completion(g)) {
      rep.warnings.push_back(id + ": skipped: not a connected simple 4-regular graph");
      continue;
    }
    for (PairCase kind : wanted) {
      for (const auto& [v, w] : adjacent_pairs(g)) {
        if (classify_adjacent_pair(g, v, w).kind != kind) continue;
        PairSweep pair;
        pair.graph_id = id;
        pair.v = v;
        pair.w = w;
        pair.kind = kind;
        try {
          sweep_pair(pair, g, prime, budget);
        } catch (const BudgetExceeded& e) {
          pair.error = e.what();
          pair.budget_refused = true;
        } catch (const Error& e) {
          pair.error = e.what();
        }
        rep.pairs.push_back(std::move(pair));
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool IdentityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.failures == 0 && c.cases > 0; });
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random spanning tree plus extra edges; parallel edges allowed.
Graph random_connected(Rng& rng, std::size_t n, std::size_t extra, bool loops) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(uniform(rng, 0, i - 1)), i});
  for (std::size_t k = 0; k < extra; ++k) {
    const auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
    auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
    if (u == v && !loops) v = static_cast<Vertex>((u + 1 + uniform(rng, 0, n - 2)) % n);
    edges.push_back({u, v});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

std::vector<Residue> random_point(Rng& rng, const PrimeField& f, std::size_t n) {
  std::vector<Residue> out(n);
  for (auto& x : out) x = static_cast<Residue>(uniform(rng, 0, f.prime() - 1));
  return out;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 101, 65'537, 1'000'003};

PrimeField random_field(Rng& rng) {
  return PrimeField(kPrimes[uniform(rng, 0, std::size(kPrimes) - 1)]);
}

void fail(IdentityCheck& c, const std::string& what) {
  ++c.failures;
  if (c.examples.size() < kMaxExamples) c.examples.push_back(what);
}

Residue kirchhoff_or_zero(const Graph& g, const Assignment& a) {
  return g.is_connected() ? eval_kirchhoff(g, a) : 0;
}

std::vector<Residue> drop(const std::vector<Residue>& v, EdgeId e) {
  auto out = v;
  out.erase(out.begin() + e);
  return out;
}

void check_deletion_contraction(Rng& rng, IdentityCheck& c) {
  const Graph g = random_connected(rng, uniform(rng, 3, 7), uniform(rng, 0, 6), true);
  std::vector<EdgeId> candidates;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!g.edge(e).is_loop()) candidates.push_back(e);
  }
  const EdgeId e = candidates[uniform(rng, 0, candidates.size() - 1)];
  const PrimeField f = random_field(rng);
  const auto x = random_point(rng, f, g.num_edges());
  const Residue lhs = eval_kirchhoff(g, {f, x});
  const Residue del = kirchhoff_or_zero(delete_edge(g, e), {f, drop(x, e)});
  const Residue con = eval_kirchhoff(contract_edge(g, e), {f, drop(x, e)});
  ++c.cases;
  if (lhs != f.add(f.mul(x[e], del), con)) {
    fail(c, emit_edge_list(g).dump() + " edge " + std::to_string(e) + " p=" + std::to_string(f.prime()));
  }
}

void check_matrix_tree(Rng& rng, IdentityCheck& c) {
  const Graph g = random_connected(rng, uniform(rng, 2, 7), uniform(rng, 0, 6), true);
  const PrimeField f = random_field(rng);
  const Assignment a(f, random_point(rng, f, g.num_edges()));
  // Psi does not depend on orientation, edge order or the removed vertex.
  Orientation o;
  o.edge_rank.resize(g.num_edges());
  std::iota(o.edge_rank.begin(), o.edge_rank.end(), 0U);
  std::shuffle(o.edge_rank.begin(), o.edge_rank.end(), rng);
  o.removed_vertex = static_cast<Vertex>(uniform(rng, 0, g.num_vertices() - 1));
  const Residue trees = eval_kirchhoff_by_trees(g, a);
  ++c.cases;
  if (eval_kirchhoff(g, a) != trees || eval_kirchhoff(g, a, o) != trees) {
    fail(c, emit_edge_list(g).dump() + " p=" + std::to_string(f.prime()));
  }
}

void check_dodgson_forest(Rng& rng, IdentityCheck& c) {
  // A random connected graph plus a vertex u joined to three distinct vertices.
  const std::size_t n = uniform(rng, 3, 6);
  const Graph base = random_connected(rng, n, uniform(rng, 0, 5), false);
  std::vector<Vertex> others(n);
  std::iota(others.begin(), others.end(), Vertex{0});
  std::shuffle(others.begin(), others.end(), rng);
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  const auto u = static_cast<Vertex>(n);
  for (std::size_t i = 0; i < 3; ++i) edges.push_back({u, others[i]});
  std::shuffle(edges.begin(), edges.end(), rng);
  const Graph g(n + 1, std::move(edges));

  const auto red = reduce_at_3valent(g, u);
  const EdgeId rows[] = {red.e1};
  const EdgeId cols[] = {red.e2};
  const EdgeId zeroed[] = {red.e3};
  const PrimeField f(1'000'003);
  std::optional<Residue> sign;
  for (int k = 0; k < 6; ++k) {
    const auto x = random_point(rng, f, g.num_edges());
    std::vector<Residue> y(red.deletion.graph.num_edges());
    for (EdgeId e = 0; e < y.size(); ++e) y[e] = x[red.deletion.new_to_old_edge[e]];
    const Residue d = eval_dodgson(g, rows, cols, zeroed, {f, x});
    const Residue phi = eval_forest(red.deletion.graph, red.partition, {f, y});
    ++c.cases;
    if (phi == 0) {
      if (d != 0) fail(c, emit_edge_list(g).dump() + ": forest vanishes, Dodgson does not");
      continue;
    }
    const Residue ratio = f.mul(d, f.inv(phi));
    if (ratio != 1 && ratio != f.prime() - 1) {
      fail(c, emit_edge_list(g).dump() + ": ratio " + std::to_string(ratio));
    } else if (sign && *sign != ratio) {
      fail(c, emit_edge_list(g).dump() + ": sign changes between points");
    }
    sign = ratio;
  }
}

void check_homogeneity(Rng& rng, IdentityCheck& c) {
  const Graph g = random_connected(rng, uniform(rng, 2, 7), uniform(rng, 0, 6), true);
  const PrimeField f = random_field(rng);
  auto x = random_point(rng, f, g.num_edges());
  const auto lambda = static_cast<Residue>(uniform(rng, 0, f.prime() - 1));
  const Residue base = eval_kirchhoff(g, {f, x});
  for (auto& v : x) v = f.mul(v, lambda);
  ++c.cases;
  const auto ell = static_cast<std::uint64_t>(g.loop_number());
  if (eval_kirchhoff(g, {f, x}) != f.mul(f.pow(lambda, ell), base)) {
    fail(c, emit_edge_list(g).dump() + " lambda " + std::to_string(lambda));
  }
}

void check_chevalley_warning(Rng& rng, IdentityCheck& c) {
  const std::size_t n = uniform(rng, 1, 3);
  const std::uint32_t p = uniform(rng, 0, 1) == 0 ? 2 : 3;
  DensePoly poly(n, p);
  auto random_monomial = [&](std::size_t degree) {
    DensePoly::Exponents e(n, 0);
    for (std::size_t k = 0; k < degree; ++k) ++e[uniform(rng, 0, n - 1)];
    return e;
  };
  const std::size_t terms = uniform(rng, 1, 6);
  for (std::size_t k = 0; k < terms; ++k) {
    poly.add_term(random_monomial(uniform(rng, 0, n)), static_cast<std::int64_t>(uniform(rng, 1, p - 1)));
  }
  while (poly.degree() != static_cast<int>(n)) {
    poly.add_term(random_monomial(n), static_cast<std::int64_t>(uniform(rng, 1, p - 1)));
  }
  const auto r = cw_coefficient_check(poly);
  ++c.cases;
  if (!r.pass) {
    std::ostringstream os;
    os << "N=" << n << " p=" << p << " coefficient " << r.coefficient << " zeros " << r.zeros;
    fail(c, os.str());
  }
}

}  // namespace

IdentityReport check_identities(std::uint64_t seed, std::size_t rounds) {
  IdentityReport rep;
  rep.seed = seed;
  Rng rng(seed);
  using Check = void (*)(Rng&, IdentityCheck&);
  const std::pair<const char*, Check> suite[] = {
      {"deletion-contraction", &check_deletion_contraction},
      {"matrix-tree = tree sum", &check_matrix_tree},
      {"Dodgson = +-forest polynomial", &check_dodgson_forest},
      {"homogeneity of degree loop number", &check_homogeneity},
      {"Chevalley-Warning coefficient", &check_chevalley_warning},
  };
  for (const auto& [name, check] : suite) {
    IdentityCheck c;
    c.name = name;
    for (std::size_t i = 0; i < rounds; ++i) {
      try {
        check(rng, c);
      } catch (const Error& e) {
        ++c.cases;
        fail(c, std::string("exception: ") + e.what());
      }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json route_json(const std::optional<RouteResult>& r) {
  if (!r) return nullptr;
  return {{"c2", r->c2}, {"raw", r->raw}};
}

nlohmann::json report_json(const C2Report& r) {
  nlohmann::json j{{"vertex", r.vertex},
                   {"prime", r.prime},
                   {"agree", r.agree()},
                   {"direct", route_json(r.direct)},
                   {"denom", route_json(r.denom)},
                   {"partition", route_json(r.partition)}};
  const auto v = r.value();
  j["c2"] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json counts_json(const CountReport& c) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& e : c.counts) counts[e.label] = e.count;
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& i : c.identities) {
    ids.push_back({{"name", i.name},
                   {"modulus", i.modulus},
                   {"value", i.value},
                   {"expected", i.expected},
                   {"holds", i.holds()}});
  }
  nlohmann::json j{{"prime", c.prime}, {"counts", counts}, {"identities", ids}};
  j["c2_v"] = c.c2_v ? nlohmann::json(*c.c2_v) : nlohmann::json(nullptr);
  j["c2_w"] = c.c2_w ? nlohmann::json(*c.c2_w) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json sweep_json(const SweepReport& s) {
  return {{"name", s.name},
          {"domain_size", s.domain_size},
          {"fixed_points", s.fixed_points},
          {"involution_failures", s.involution_failures},
          {"membership_failures", s.membership_failures},
          {"stability_failures", s.stability_failures},
          {"errors", s.errors},
          {"cases", s.cases},
          {"parity_even", s.parity_even()},
          {"ok", s.ok()},
          {"failures", s.failures}};
}

nlohmann::json orbit_json(const OrbitSweepReport& o, const std::string& label) {
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto& [size, n] : o.orbit_sizes) sizes[std::to_string(size)] = n;
  return {{"label", label},
          {"prime", o.prime},
          {"size_first", o.size_first},
          {"size_second", o.size_second},
          {"orbits", o.orbits},
          {"orbit_sizes", sizes},
          {"swap_in_first", o.swap_in_first},
          {"swap_in_second", o.swap_in_second},
          {"size_failures", o.size_failures},
          {"split_failures", o.split_failures},
          {"closure_failures", o.closure_failures},
          {"ok", o.ok()},
          {"failures", o.failures}};
}

std::string residue_text(const std::optional<RouteResult>& r) {
  return r ? std::to_string(r->c2) : "-";
}

}  // namespace

nlohmann::json to_json(const ComputeResult& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& v : r.results) {
    auto j = report_json(v.report);
    j["vertex"] = v.vertex ? nlohmann::json(*v.vertex) : nlohmann::json(nullptr);
    results.push_back(std::move(j));
  }
  return {{"command", "compute"}, {"graph", r.graph_id}, {"mode", r.mode},
          {"results", results},   {"ok", r.ok()}};
}

nlohmann::json to_json(const CompletionReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : e.vertices) vs.push_back(report_json(v));
    nlohmann::json j{{"graph", e.graph_id}, {"prime", e.prime}, {"pairs", e.pair_cases},
                     {"vertices", vs},      {"tag", e.tag}};
    if (e.error.empty()) {
      j["verdict"] = e.verdict;
    } else {
      j["verdict"] = nullptr;
      j["error"] = e.error;
    }
    entries.push_back(std::move(j));
  }
  return {{"command", "verify-completion"},
          {"entries", entries},
          {"warnings", r.warnings},
          {"ok", !r.violations() && !r.budget_refusals()}};
}

nlohmann::json to_json(const InvolutionReport& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : r.pairs) {
    nlohmann::json j{{"graph", p.graph_id},
                     {"v", p.v},
                     {"w", p.w},
                     {"case", std::string(to_string(p.kind))}};
    if (p.counts) j["counts"] = counts_json(*p.counts);
    nlohmann::json sweeps = nlohmann::json::array();
    for (const auto& s : p.sweeps) sweeps.push_back(sweep_json(s));
    j["sweeps"] = sweeps;
    nlohmann::json orbits = nlohmann::json::array();
    for (std::size_t i = 0; i < p.orbits.size(); ++i) orbits.push_back(orbit_json(p.orbits[i], p.orbit_labels[i]));
    j["orbits"] = orbits;
    if (!p.error.empty()) j["error"] = p.error;
    pairs.push_back(std::move(j));
  }
  return {{"command", "sweep-involutions"},
          {"prime", r.prime},
          {"pairs", pairs},
          {"warnings", r.warnings},
          {"ok", !r.violations() && !r.budget_refusals()}};
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"examples", c.examples}});
  }
  return {{"command", "check-identities"}, {"seed", r.seed}, {"checks", checks}, {"ok", r.ok()}};
}

std::string to_table(const ComputeResult& r) {
  std::ostringstream os;
  os << r.graph_id << " (" << r.mode << ")\n";
  os << std::left << std::setw(8) << "vertex" << std::setw(7) << "prime" << std::setw(8) << "direct"
     << std::setw(8) << "denom" << std::setw(11) << "partition" << "agree\n";
  for (const auto& v : r.results) {
    os << std::left << std::setw(8) << (v.vertex ? std::to_string(*v.vertex) : "-") << std::setw(7)
       << v.prime << std::setw(8) << residue_text(v.report.direct) << std::setw(8)
       << residue_text(v.report.denom) << std::setw(11) << residue_text(v.report.partition)
       << (v.report.agree() ? "yes" : "NO (implementation bug)") << '\n';
  }
  return os.str();
}

std::string to_table(const CompletionReport& r) {
  std::ostringstream os;
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  os << std::left << std::setw(14) << "graph" << std::setw(7) << "prime" << std::setw(26)
     << "c2 per vertex" << std::setw(9) << "verdict" << "tag\n";
  for (const auto& e : r.entries) {
    os << std::left << std::setw(14) << e.graph_id << std::setw(7) << e.prime;
    if (!e.error.empty()) {
      os << (e.budget_refused ? "budget refused: " : e.skipped ? "skipped: " : "VIOLATION: ")
         << e.error << '\n';
      continue;
    }
    std::string values;
    for (const auto& v : e.vertices) {
      const auto x = v.value();
      values += x ? std::to_string(*x) : "!";
    }
    os << std::setw(26) << values << std::setw(9) << (e.verdict ? "equal" : "DIFFER") << e.tag << '\n';
  }
  return os.str();
}

std::string to_table(const InvolutionReport& r) {
  std::ostringstream os;
  for (const auto& w : r.warnings) os << "warning: " << w << '\n';
  for (const auto& p : r.pairs) {
    os << p.graph_id << " pair " << p.v << "-" << p.w << " (" << to_string(p.kind) << ")\n";
    if (!p.error.empty()) {
      os << "  " << (p.budget_refused ? "budget refused: " : "error: ") << p.error << '\n';
      continue;
    }
    if (p.counts) {
      for (const auto& i : p.counts->identities) {
        os << "  " << std::left << std::setw(40) << i.name << " mod " << i.modulus << ": " << i.value
           << (i.holds() ? "  ok" : "  FAILS, expected " + std::to_string(i.expected)) << '\n';
      }
    }
    for (const auto& s : p.sweeps) {
      os << "  " << std::left << std::setw(32) << s.name << " domain " << std::setw(8) << s.domain_size
         << " violations " << s.violations() << (s.ok() ? "  ok" : "  FAIL") << '\n';
      for (const auto& f : s.failures) os << "    " << f << '\n';
    }
    for (std::size_t i = 0; i < p.orbits.size(); ++i) {
      const auto& o = p.orbits[i];
      os << "  orbits " << std::left << std::setw(32) << p.orbit_labels[i] << " classes " << o.size_first
         << "+" << o.size_second << " orbits " << o.orbits << (o.ok() ? "  ok" : "  FAIL") << '\n';
      for (const auto& f : o.failures) os << "    " << f << '\n';
    }
  }
  return os.str();
}

std::string to_table(const IdentityReport& r) {
  std::ostringstream os;
  os << "seed " << r.seed << '\n';
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(36) << c.name << " cases " << std::setw(6) << c.cases
       << " failures " << c.failures << '\n';
    for (const auto& e : c.examples) os << "    " << e << '\n';
  }
  return os.str();
}

}  // namespace c2lab::verify
