#include "c2lab/involutions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

struct LeafEdge {
  EdgeId edge;
  Vertex other;
};

// The single psi-edge at x; the lemmas guarantee x is a leaf of psi.
LeafEdge psi_leaf_edge(const Graph& g, const EdgeBipartition& b, Vertex x) {
  std::optional<LeafEdge> found;
  for (const auto& inc : g.incident(x)) {
    if (!b.psi.contains(inc.edge)) continue;
    if (found) throw StructuralViolation("vertex " + std::to_string(x) + " is not a leaf of psi");
    found = LeafEdge{inc.edge, inc.other};
  }
  if (!found) throw StructuralViolation("vertex " + std::to_string(x) + " has no psi-edge");
  return *found;
}

std::size_t psi_degree(const Graph& g, const EdgeBipartition& b, Vertex x) {
  std::size_t d = 0;
  for (const auto& inc : g.incident(x)) d += b.psi.contains(inc.edge) ? 1 : 0;
  return d;
}

EdgeBipartition apply_swaps(const EdgeBipartition& b,
                            const std::vector<std::pair<EdgeId, EdgeId>>& swaps) {
  EdgeBipartition out = b;
  for (const auto& [from_psi, from_phi] : swaps) {
    if (!b.psi.contains(from_psi) || !b.phi.contains(from_phi)) {
      throw StructuralViolation("swap edges are not on the expected sides");
    }
  }
  for (const auto& [from_psi, from_phi] : swaps) {
    out.psi.erase(from_psi);
    out.phi.insert(from_psi);
    out.phi.erase(from_phi);
    out.psi.insert(from_phi);
  }
  return out;
}

void check_output(const Graph& g, const InvolutionResult& r) {
  if (!is_valid_bipartition(g, r.out)) {
    throw StructuralViolation("swap produced an invalid edge bipartition: " + r.trace.describe());
  }
}

std::vector<Vertex> marked_in(const PairGraph& pg, const ForestView& phi, std::uint32_t comp) {
  std::vector<Vertex> out;
  for (Vertex x : pg.marked) {
    if (phi.component(x) == comp) out.push_back(x);
  }
  return out;
}

ForestView two_forest_view(const Graph& g, const EdgeBipartition& b) {
  ForestView phi(g, b.phi);
  if (!phi.acyclic() || phi.num_components() != 2) {
    throw InvalidInput("phi is not a spanning 2-forest");
  }
  return phi;
}

std::vector<char> membership(const Graph& g, const std::vector<Vertex>& part) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex x : part) in.at(x) = 1;
  return in;
}

}  // namespace

Vertex find_control_vertex(const Graph& g, const EdgeBipartition& b,
                           const std::vector<Vertex>& part, ControlSpec spec) {
  if (part.size() != 4) throw InvalidInput("control vertex search needs a 4-vertex part");
  if (std::find(part.begin(), part.end(), spec.special) == part.end()) {
    throw InvalidInput("special vertex is not in the part");
  }
  const ForestView phi(g, b.phi);
  const auto comp = phi.component(part[0]);
  for (Vertex x : part) {
    if (phi.component(x) != comp) throw StructuralViolation("part is split across trees of phi");
  }
  const auto in_part = membership(g, part);

  std::vector<Vertex> matches;
  for (Vertex u : phi.tree_of(part[0])) {
    const Vertex removed[] = {u};
    std::vector<std::size_t> counts;
    std::size_t special_count = 0;
    for (const auto& comp_vertices : phi.components_without(u, removed)) {
      std::size_t k = 0;
      bool has_special = false;
      for (Vertex y : comp_vertices) {
        k += in_part[y] ? 1 : 0;
        has_special = has_special || y == spec.special;
      }
      if (k > 0) counts.push_back(k);
      if (has_special) special_count = k;
    }
    std::sort(counts.rbegin(), counts.rend());
    const bool shape = in_part[u] ? counts == std::vector<std::size_t>{2, 1}
                                  : counts == std::vector<std::size_t>{2, 1, 1};
    if (!shape) continue;
    const bool placed = spec.mode == ControlMode::InTwoPart
                            ? (spec.special != u && special_count == 2)
                            : (spec.special == u || special_count == 1);
    if (placed) matches.push_back(u);
  }
  if (matches.size() != 1) {
    throw StructuralViolation(std::to_string(matches.size()) +
                              " vertices satisfy the control-vertex conditions");
  }
  const Vertex v = matches.front();
  const std::size_t deg = phi.degree(v);
  if (!((deg == 2 && in_part[v]) || (deg == 3 && !in_part[v]))) {
    throw StructuralViolation("control vertex " + std::to_string(v) + " has valency " +
                              std::to_string(deg) + " in its tree");
  }
  if (psi_degree(g, b, v) != 1) {
    throw StructuralViolation("control vertex " + std::to_string(v) + " is not a leaf of psi");
  }
  return v;
}

std::pair<Vertex, Vertex> find_two_control_vertices(const Graph& g, const EdgeBipartition& b,
                                                    const std::vector<Vertex>& part) {
  if (part.size() != 5) throw InvalidInput("two control vertices need a 5-vertex part");
  const ForestView phi(g, b.phi);
  const auto comp = phi.component(part[0]);
  for (Vertex x : part) {
    if (phi.component(x) != comp) throw StructuralViolation("part is split across trees of phi");
  }
  const auto in_part = membership(g, part);
  const auto tree = phi.tree_of(part[0]);

  std::vector<std::pair<Vertex, Vertex>> matches;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.size(); ++j) {
      const Vertex removed[] = {tree[i], tree[j]};
      bool singletons = true;
      for (const auto& cv : phi.components_without(tree[i], removed)) {
        std::size_t k = 0;
        for (Vertex y : cv) k += in_part[y] ? 1 : 0;
        if (k > 1) {
          singletons = false;
          break;
        }
      }
      if (singletons) matches.emplace_back(tree[i], tree[j]);
    }
  }
  if (matches.size() != 1) {
    throw StructuralViolation(std::to_string(matches.size()) +
                              " vertex pairs satisfy the two-control-vertex conditions");
  }
  const auto [v, w] = matches.front();
  if (g.adjacent(v, w)) throw StructuralViolation("control vertices are adjacent");
  for (Vertex x : {v, w}) {
    const std::size_t deg = phi.degree(x);
    if (!((deg == 2 && in_part[x]) || (deg == 3 && !in_part[x]))) {
      throw StructuralViolation("control vertex " + std::to_string(x) + " has valency " +
                                std::to_string(deg) + " in its tree");
    }
    if (psi_degree(g, b, x) != 1) {
      throw StructuralViolation("control vertex " + std::to_string(x) + " is not a leaf of psi");
    }
  }
  return {v, w};
}

std::string_view to_string(SwapCase c) {
  switch (c) {
    case SwapCase::TwoValent: return "two-valent";
    case SwapCase::SStep1: return "S-1";
    case SwapCase::SStep2i: return "S-2i";
    case SwapCase::SStep2ii: return "S-2ii";
    case SwapCase::R1i: return "R-1i";
    case SwapCase::R1ii: return "R-1ii";
    case SwapCase::R1Both: return "R-1i+1ii";
    case SwapCase::R1Crossed: return "R-1-crossed";
    case SwapCase::R2: return "R-2";
    case SwapCase::RControlIn: return "R-control-in";
    case SwapCase::RControlOut: return "R-control-out";
  }
  return "?";
}

std::string SwapTrace::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " swaps";
  for (const auto& [a, b] : swaps) os << " (" << a << "<->" << b << ")";
  if (!controls.empty()) {
    os << " controls";
    for (Vertex v : controls) os << ' ' << v;
  }
  return os.str();
}

InvolutionResult swap_two_valent(const Graph& g, const EdgeBipartition& b, Vertex c) {
  const auto inc = g.incident(c);
  if (inc.size() != 2 || inc[0].edge == inc[1].edge) {
    throw InvalidInput("vertex " + std::to_string(c) + " is not 2-valent");
  }
  const bool first_in_psi = b.psi.contains(inc[0].edge);
  if (first_in_psi == b.psi.contains(inc[1].edge)) {
    throw StructuralViolation("psi and phi do not each hold one edge at " + std::to_string(c));
  }
  InvolutionResult r;
  r.trace.kind = SwapCase::TwoValent;
  r.trace.swaps = {first_in_psi ? std::pair{inc[0].edge, inc[1].edge}
                                : std::pair{inc[1].edge, inc[0].edge}};
  r.out = apply_swaps(b, r.trace.swaps);
  check_output(g, r);
  return r;
}

GeneralEdgePartition swap_two_valent(const Graph& g, const GeneralEdgePartition& gp, Vertex c,
                                     std::size_t forest, std::size_t tree) {
  const auto inc = g.incident(c);
  if (inc.size() != 2 || inc[0].edge == inc[1].edge) {
    throw InvalidInput("vertex " + std::to_string(c) + " is not 2-valent");
  }
  if (forest >= gp.forests.size() || tree >= gp.trees.size()) {
    throw InvalidInput("part index out of range");
  }
  auto edge_at_c = [&](const EdgeSet& s) {
    const bool a = s.contains(inc[0].edge);
    const bool b = s.contains(inc[1].edge);
    if (a == b) throw StructuralViolation("a part does not hold exactly one edge at c");
    return a ? inc[0].edge : inc[1].edge;
  };
  for (const auto& s : gp.trees) edge_at_c(s);
  for (const auto& s : gp.forests) edge_at_c(s);
  const EdgeId ef = edge_at_c(gp.forests[forest]);
  const EdgeId et = edge_at_c(gp.trees[tree]);
  if (ef == et) throw InvalidInput("forest and tree hold the same edge at c");
  GeneralEdgePartition out = gp;
  out.forests[forest].erase(ef);
  out.forests[forest].insert(et);
  out.trees[tree].erase(et);
  out.trees[tree].insert(ef);
  const auto shape = analyze_forest(g, out.forests[forest]);
  if (!is_spanning_tree(g, out.trees[tree]) || !shape.acyclic || shape.num_components != 2) {
    throw StructuralViolation("swap at a 2-valent vertex broke a tree or forest");
  }
  return out;
}

InvolutionResult s_case_involution(const PairGraph& s, const EdgeBipartition& b) {
  const Graph& g = s.graph;
  const Vertex c = s.marked_label('c');
  const ForestView phi = two_forest_view(g, b);
  const auto part = marked_in(s, phi, phi.component(c));
  if (part.size() != 4) throw InvalidInput("bipartition is not of the form {x},{c,*,*,*}");

  const LeafEdge at_c = psi_leaf_edge(g, b, c);
  if (phi.component(at_c.other) == phi.component(c)) {
    auto r = swap_two_valent(g, b, c);
    r.trace.kind = SwapCase::SStep1;
    return r;
  }
  const Vertex v = find_control_vertex(g, b, part, {c, ControlMode::InTwoPart});
  const LeafEdge at_v = psi_leaf_edge(g, b, v);
  InvolutionResult r;
  r.trace.controls = {v};
  if (phi.component(at_v.other) == phi.component(v)) {
    r.trace.kind = SwapCase::SStep2i;
    r.trace.swaps = {{at_v.edge, phi.first_edge_towards(v, at_v.other)}};
    r.out = apply_swaps(b, r.trace.swaps);
  } else {
    r.trace.kind = SwapCase::SStep2ii;
    const EdgeId eta = phi.first_edge_towards(v, c);
    const auto mid = apply_swaps(b, {{at_v.edge, eta}});
    const auto then_c = swap_two_valent(g, mid, c);
    r.trace.swaps = {{at_v.edge, eta}, then_c.trace.swaps.front()};
    r.out = then_c.out;
  }
  check_output(g, r);
  return r;
}

InvolutionResult s_case_involution_variant(const PairGraph& s, const EdgeBipartition& b) {
  const Graph& g = s.graph;
  const Vertex c = s.marked_label('c');
  const ForestView phi = two_forest_view(g, b);
  const auto part = marked_in(s, phi, phi.component(c));
  if (part.size() != 2) throw InvalidInput("bipartition is not of the form {c,x},{*,*,*}");

  const LeafEdge at_c = psi_leaf_edge(g, b, c);
  if (phi.component(at_c.other) == phi.component(c)) {
    auto r = swap_two_valent(g, b, c);
    r.trace.kind = SwapCase::SStep1;
    return r;
  }
  const auto pre = swap_two_valent(g, b, c);
  const auto inner = s_case_involution(s, pre.out);
  if (inner.trace.kind == SwapCase::SStep1) {
    throw InternalInconsistency("conjugated S map fell into the swap-at-c case");
  }
  const auto post = swap_two_valent(g, inner.out, c);
  InvolutionResult r;
  r.out = post.out;
  r.trace.kind = inner.trace.kind;
  r.trace.controls = inner.trace.controls;
  r.trace.swaps.push_back(pre.trace.swaps.front());
  r.trace.swaps.insert(r.trace.swaps.end(), inner.trace.swaps.begin(), inner.trace.swaps.end());
  r.trace.swaps.push_back(post.trace.swaps.front());
  check_output(g, r);
  return r;
}

InvolutionResult r_case_single_control_involution(const PairGraph& rg, const EdgeBipartition& b) {
  const Graph& g = rg.graph;
  const ForestView phi = two_forest_view(g, b);
  auto small = marked_in(rg, phi, 0);
  auto big = marked_in(rg, phi, 1);
  if (small.size() > big.size()) std::swap(small, big);
  if (small.size() != 2) throw InvalidInput("bipartition is not of the form {y,z},{x,*,*,*}");

  const std::vector<Vertex> abc = {rg.marked_label('a'), rg.marked_label('b'), rg.marked_label('c')};
  const std::vector<Vertex> def = {rg.marked_label('d'), rg.marked_label('e'), rg.marked_label('f')};
  const auto& triple =
      std::find(abc.begin(), abc.end(), small[0]) != abc.end() ? abc : def;
  std::optional<Vertex> x;
  for (Vertex t : triple) {
    if (t != small[0] && t != small[1]) {
      if (x) throw InvalidInput("2-part does not come from one side of the pair");
      x = t;
    }
  }
  if (!x || std::find(triple.begin(), triple.end(), small[1]) == triple.end()) {
    throw InvalidInput("2-part does not come from one side of the pair");
  }

  const Vertex v = find_control_vertex(g, b, big, {*x, ControlMode::SelfOrSingleton});
  const LeafEdge at_v = psi_leaf_edge(g, b, v);
  InvolutionResult r;
  r.trace.controls = {v};
  if (phi.component(at_v.other) == phi.component(v)) {
    r.trace.kind = SwapCase::RControlIn;
    r.trace.swaps = {{at_v.edge, phi.first_edge_towards(v, at_v.other)}};
  } else {
    r.trace.kind = SwapCase::RControlOut;
    const auto in_big = membership(g, big);
    std::optional<Vertex> target;
    for (const auto& branch : phi.branches_without(v)) {
      const auto k = std::count_if(branch.begin(), branch.end(), [&](Vertex y) { return in_big[y]; });
      if (k == 2) {
        target = *std::find_if(branch.begin(), branch.end(), [&](Vertex y) { return in_big[y]; });
      }
    }
    if (!target) throw StructuralViolation("control vertex has no branch holding two part vertices");
    r.trace.swaps = {{at_v.edge, phi.first_edge_towards(v, *target)}};
  }
  r.out = apply_swaps(b, r.trace.swaps);
  check_output(g, r);
  return r;
}

InvolutionResult r_case_involution(const PairGraph& rg, const EdgeBipartition& b) {
  const Graph& g = rg.graph;
  const ForestView phi = two_forest_view(g, b);
  auto small = marked_in(rg, phi, 0);
  auto big = marked_in(rg, phi, 1);
  if (small.size() > big.size()) std::swap(small, big);
  if (small.size() != 1) throw InvalidInput("bipartition is not of the form {x},{*,*,*,*,*}");

  const auto [v, w] = find_two_control_vertices(g, b, big);
  const LeafEdge at_v = psi_leaf_edge(g, b, v);
  const LeafEdge at_w = psi_leaf_edge(g, b, w);
  const bool v_in = phi.component(at_v.other) == phi.component(v);
  const bool w_in = phi.component(at_w.other) == phi.component(w);
  InvolutionResult r;
  r.trace.controls = {v, w};
  // When each path runs through the other control vertex, swapping at both
  // closes a cycle. Swap only at the smaller one; the crossing persists.
  const bool crossed = v_in && w_in &&
                       phi.first_edge_towards(w, at_v.other) != phi.first_edge_towards(w, v) &&
                       phi.first_edge_towards(v, at_w.other) != phi.first_edge_towards(v, w);
  if (crossed) {
    r.trace.kind = SwapCase::R1Crossed;
    r.trace.swaps = {{at_v.edge, phi.first_edge_towards(v, at_v.other)}};
  } else if (v_in || w_in) {
    r.trace.kind = v_in && w_in ? SwapCase::R1Both : (v_in ? SwapCase::R1i : SwapCase::R1ii);
    if (v_in) r.trace.swaps.emplace_back(at_v.edge, phi.first_edge_towards(v, at_v.other));
    if (w_in) r.trace.swaps.emplace_back(at_w.edge, phi.first_edge_towards(w, at_w.other));
  } else {
    r.trace.kind = SwapCase::R2;
    r.trace.swaps = {{at_v.edge, phi.first_edge_towards(v, w)},
                     {at_w.edge, phi.first_edge_towards(w, v)}};
  }
  if (r.trace.swaps.size() == 2 && (r.trace.swaps[0].first == r.trace.swaps[1].first ||
                                    r.trace.swaps[0].second == r.trace.swaps[1].second)) {
    throw StructuralViolation("the four swapped edges are not distinct: " + r.trace.describe());
  }
  r.out = apply_swaps(b, r.trace.swaps);
  check_output(g, r);
  return r;
}

namespace {

bool less_partition(const GeneralEdgePartition& x, const GeneralEdgePartition& y) {
  if (x.trees != y.trees) return x.trees < y.trees;
  return x.forests < y.forests;
}

}  // namespace

std::vector<GeneralEdgePartition> orbit_of(const Graph& g, const GeneralEdgePartition& gp,
                                           std::size_t forest, Vertex c) {
  if (forest >= gp.forests.size()) throw InvalidInput("forest index out of range");
  const auto inc = g.incident(c);
  if (inc.size() != 2 || inc[0].edge == inc[1].edge) {
    throw InvalidInput("vertex " + std::to_string(c) + " is not 2-valent");
  }
  std::set<GeneralEdgePartition, decltype(&less_partition)> seen(&less_partition);
  std::vector<GeneralEdgePartition> queue{gp};
  seen.insert(gp);
  while (!queue.empty()) {
    const GeneralEdgePartition cur = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < cur.trees.size(); ++j) {
      const bool differs = cur.trees[j].contains(inc[0].edge) != cur.forests[forest].contains(inc[0].edge);
      if (!differs) continue;
      auto next = swap_two_valent(g, cur, c, forest, j);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

using Map = InvolutionResult (*)(const PairGraph&, const EdgeBipartition&);

bool mirrored(const SwapTrace& a, const SwapTrace& b) {
  if (a.swaps.size() != b.swaps.size()) return false;
  for (const auto& [x, y] : a.swaps) {
    if (std::find(b.swaps.begin(), b.swaps.end(), std::pair{y, x}) == b.swaps.end()) return false;
  }
  return true;
}

SweepReport run_sweep(std::string name, const PairGraph& pg,
                      std::initializer_list<std::string_view> domain_specs, Map map,
                      bool check_controls) {
  SweepReport rep;
  rep.name = std::move(name);
  const BipartitionCatalog cat(pg.graph, pg.marked);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> domain;
  for (auto spec : domain_specs) domain.push_back(cat.part_masks(partition_from_labels(pg, spec)));
  auto in_domain = [&](std::uint32_t mask) {
    return std::any_of(domain.begin(), domain.end(), [&](const auto& d) {
      return BipartitionCatalog::compatible(mask, d.first, d.second);
    });
  };
  auto record = [&](const std::string& msg) {
    if (rep.failures.size() < kMaxRecordedFailures) rep.failures.push_back(msg);
  };
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (!in_domain(cat.mask(i))) continue;
    ++rep.domain_size;
    const EdgeBipartition& x = cat.item(i);
    try {
      const auto r1 = map(pg, x);
      ++rep.cases[std::string(to_string(r1.trace.kind))];
      if (r1.out == x) {
        ++rep.fixed_points;
        record("fixed point: " + r1.trace.describe());
      }
      const auto m = cat.mask_of(r1.out);
      if (!m || !in_domain(*m)) {
        ++rep.membership_failures;
        record("image outside the union: " + r1.trace.describe());
        continue;
      }
      const auto r2 = map(pg, r1.out);
      if (!(r2.out == x)) {
        ++rep.involution_failures;
        record("f(f(x)) != x: " + r1.trace.describe() + " then " + r2.trace.describe());
      }
      if (check_controls &&
          (r1.trace.kind != r2.trace.kind || r1.trace.controls != r2.trace.controls ||
           !mirrored(r1.trace, r2.trace))) {
        ++rep.stability_failures;
        record("control/trace mismatch: " + r1.trace.describe() + " vs " + r2.trace.describe());
      }
    } catch (const Error& e) {
      ++rep.errors;
      record(e.what());
    }
  }
  return rep;
}

InvolutionResult swap_c_map(const PairGraph& s, const EdgeBipartition& b) {
  return swap_two_valent(s.graph, b, s.marked_label('c'));
}

}  // namespace

SweepReport sweep_s_swap_c(const PairGraph& s) {
  if (s.label.kind != PairCase::S) throw InvalidInput("S-case sweep needs an S-case pair");
  return run_sweep("S swap at c", s, {"abc|de", "ab|cde"}, &swap_c_map, true);
}

SweepReport sweep_s_bijection(const PairGraph& s) {
  if (s.label.kind != PairCase::S) throw InvalidInput("S-case sweep needs an S-case pair");
  return run_sweep("S control vertex (1|4)", s, {"a|bcde", "b|acde", "d|abce", "e|abcd"},
                   &s_case_involution, true);
}

SweepReport sweep_s_bijection_variant(const PairGraph& s) {
  if (s.label.kind != PairCase::S) throw InvalidInput("S-case sweep needs an S-case pair");
  return run_sweep("S control vertex (2|3)", s, {"ac|bde", "bc|ade", "cd|abe", "ce|abd"},
                   &s_case_involution_variant, true);
}

SweepReport sweep_r_control_bijection(const PairGraph& r) {
  if (r.label.kind != PairCase::R) throw InvalidInput("R-case sweep needs an R-case pair");
  return run_sweep("R one control vertex (2|4)", r,
                   {"ab|cdef", "ac|bdef", "bc|adef", "de|abcf", "df|abce", "ef|abcd"},
                   &r_case_single_control_involution, true);
}

SweepReport sweep_r_bijection(const PairGraph& r) {
  if (r.label.kind != PairCase::R) throw InvalidInput("R-case sweep needs an R-case pair");
  return run_sweep("R two control vertices (1|5)", r,
                   {"a|bcdef", "b|acdef", "c|abdef", "d|abcef", "e|abcdf", "f|abcde"},
                   &r_case_involution, true);
}

bool OrbitSweepReport::ok() const noexcept {
  return size_failures == 0 && split_failures == 0 && closure_failures == 0 &&
         (size_first + size_second) % prime == 0 && swap_in_first % prime == 0 &&
         swap_in_second % prime == 0;
}

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

OrbitSweepReport sweep_orbits(const Graph& g, const std::vector<VertexPartition>& forest_parts,
                              std::size_t forest, Vertex c, std::uint64_t budget) {
  const std::size_t k = forest_parts.size();
  if (forest >= k) throw InvalidInput("forest index out of range");
  const auto inc = g.incident(c);
  if (inc.size() != 2 || inc[0].edge == inc[1].edge) {
    throw InvalidInput("vertex " + std::to_string(c) + " is not 2-valent");
  }
  auto swapped_parts = forest_parts;
  {
    auto& P = swapped_parts[forest];
    if (P.size() != 2) throw InvalidInput("forest partitions must have two parts");
    const int side = std::find(P[0].begin(), P[0].end(), c) != P[0].end()   ? 0
                     : std::find(P[1].begin(), P[1].end(), c) != P[1].end() ? 1
                                                                              : -1;
    if (side < 0) throw InvalidInput("c is not in the swapped partition");
    auto& from = P[static_cast<std::size_t>(side)];
    from.erase(std::find(from.begin(), from.end(), c));
    if (from.empty()) throw InvalidInput("moving c would empty a part");
    P[static_cast<std::size_t>(1 - side)].push_back(c);
  }

  OrbitSweepReport rep;
  rep.prime = static_cast<std::uint32_t>(k + 1);
  rep.c = c;
  rep.forest = forest;
  std::unordered_map<GeneralEdgePartition, int, GeneralEdgePartitionHash> cls;
  for_each_partition_tuple(g, k, forest_parts, [&](const GeneralEdgePartition& gp) {
    cls.emplace(gp, 0);
    ++rep.size_first;
  }, budget);
  for_each_partition_tuple(g, k, swapped_parts, [&](const GeneralEdgePartition& gp) {
    cls.emplace(gp, 1);
    ++rep.size_second;
  }, budget);

  auto record = [&](const std::string& msg) {
    if (rep.failures.size() < kMaxRecordedFailures) rep.failures.push_back(msg);
  };
  std::unordered_set<GeneralEdgePartition, GeneralEdgePartitionHash> visited;
  // Iterate in a fixed order so the report is reproducible.
  std::vector<GeneralEdgePartition> elements;
  elements.reserve(cls.size());
  for (const auto& [gp, _] : cls) elements.push_back(gp);
  std::sort(elements.begin(), elements.end(), &less_partition);
  for (const auto& start : elements) {
    if (visited.count(start) != 0) continue;
    const auto orbit = orbit_of(g, start, forest, c);
    ++rep.orbits;
    ++rep.orbit_sizes[orbit.size()];
    std::uint64_t same = 0;
    std::uint64_t other = 0;
    bool closed = true;
    const int home = cls.at(start);
    for (const auto& x : orbit) {
      visited.insert(x);
      const auto it = cls.find(x);
      if (it == cls.end()) {
        closed = false;
        continue;
      }
      (it->second == home ? same : other) += 1;
    }
    if (!closed) {
      ++rep.closure_failures;
      record("orbit leaves the two classes");
      continue;
    }
    const EdgeId forest_edge =
        start.forests[forest].contains(inc[0].edge) ? inc[0].edge : inc[1].edge;
    std::uint64_t kk = 0;
    for (const auto& t : start.trees) kk += t.contains(forest_edge) ? 0 : 1;
    const std::uint64_t p = rep.prime;
    if (kk < 1 || kk > p - 1 || orbit.size() != choose(p, kk)) {
      ++rep.size_failures;
      record("orbit of size " + std::to_string(orbit.size()) + " with k = " + std::to_string(kk));
    }
    const ForestView phi(g, start.forests[forest]);
    const Vertex n_other = inc[0].edge == forest_edge ? inc[1].other : inc[0].other;
    const bool swaps_in = phi.component(n_other) == phi.component(c);
    if (swaps_in) {
      if (other != 0) {
        ++rep.split_failures;
        record("swap-in orbit crosses classes");
      }
      (home == 0 ? rep.swap_in_first : rep.swap_in_second) += same;
    } else if (same != choose(p - 1, p - 1 - kk) || other != choose(p - 1, p - kk)) {
      ++rep.split_failures;
      record("orbit split " + std::to_string(same) + "/" + std::to_string(other) + " with k = " +
             std::to_string(kk));
    }
  }
  return rep;
}

}  // namespace c2lab
