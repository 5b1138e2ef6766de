#include "c2lab/spanning.hpp"

#include <algorithm>
#include <numeric>

#include "c2lab/error.hpp"

namespace c2lab {

void validate_partition(const Graph& g, const VertexPartition& parts) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw InvalidInput("vertex partition has an empty part");
    for (Vertex x : part) {
      if (x >= g.num_vertices()) throw InvalidInput("partition vertex out of range");
      if (used[x]) throw InvalidInput("partition parts overlap at vertex " + std::to_string(x));
      used[x] = 1;
    }
  }
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex DisjointSets::find(Vertex x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  parent_[std::max(a, b)] = std::min(a, b);
  --components_;
  return true;
}

ForestShape analyze_forest(const Graph& g, const EdgeSet& edges) {
  DisjointSets ds(g.num_vertices());
  ForestShape shape;
  shape.acyclic = true;
  edges.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    if (!ds.unite(ed.u, ed.v)) shape.acyclic = false;
  });
  shape.component.assign(g.num_vertices(), 0);
  std::vector<std::uint32_t> id_of_root(g.num_vertices(), UINT32_MAX);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    const Vertex r = ds.find(x);
    if (id_of_root[r] == UINT32_MAX) id_of_root[r] = static_cast<std::uint32_t>(shape.num_components++);
    shape.component[x] = id_of_root[r];
  }
  return shape;
}

bool is_spanning_tree(const Graph& g, const EdgeSet& edges) {
  if (g.num_vertices() == 0) return false;
  if (edges.size() + 1 != g.num_vertices()) return false;
  const auto shape = analyze_forest(g, edges);
  return shape.acyclic && shape.num_components == 1;
}

namespace {

bool compatible_with_shape(const ForestShape& shape, const VertexPartition& parts) {
  if (!shape.acyclic || shape.num_components != parts.size()) return false;
  std::vector<char> taken(shape.num_components, 0);
  for (const auto& part : parts) {
    const auto comp = shape.component[part.front()];
    for (Vertex x : part) {
      if (shape.component[x] != comp) return false;
    }
    if (taken[comp]) return false;
    taken[comp] = 1;
  }
  return true;
}

}  // namespace

bool is_compatible_forest(const Graph& g, const EdgeSet& edges, const VertexPartition& parts) {
  validate_partition(g, parts);
  if (parts.empty()) return false;
  if (edges.size() + parts.size() != g.num_vertices()) return false;
  return compatible_with_shape(analyze_forest(g, edges), parts);
}

bool is_compatible_2forest(const Graph& g, const EdgeSet& edges, const VertexPartition& parts) {
  if (parts.size() != 2) throw InvalidInput("a 2-forest partition needs exactly two parts");
  return is_compatible_forest(g, edges, parts);
}

void for_each_spanning_tree(const Graph& g, const std::function<void(const EdgeSet&)>& visit) {
  if (g.num_vertices() == 0 || !g.is_connected()) {
    throw InvalidInput("spanning trees need a connected graph");
  }
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  EdgeSet included(m);

  // Recursion depth is bounded by the edge count.
  std::function<void(std::size_t, DisjointSets&, std::size_t)> rec =
      [&](std::size_t i, DisjointSets& ds, std::size_t count) {
        if (count + 1 == n) {
          visit(included);
          return;
        }
        if (i == m) return;
        const Edge& e = g.edge(static_cast<EdgeId>(i));
        if (e.is_loop() || ds.find(e.u) == ds.find(e.v)) {
          rec(i + 1, ds, count);
          return;
        }
        {
          DisjointSets with = ds;
          with.unite(e.u, e.v);
          included.insert(static_cast<EdgeId>(i));
          rec(i + 1, with, count + 1);
          included.erase(static_cast<EdgeId>(i));
        }
        // Exclusion keeps the remaining graph connected iff e is not a bridge.
        DisjointSets rest = ds;
        for (std::size_t j = i + 1; j < m; ++j) {
          const Edge& f = g.edge(static_cast<EdgeId>(j));
          rest.unite(f.u, f.v);
        }
        if (rest.find(e.u) == rest.find(e.v)) rec(i + 1, ds, count);
      };
  DisjointSets ds(n);
  rec(0, ds, 0);
}

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](const EdgeSet& t) { out.push_back(t); });
  return out;
}

void for_each_spanning_forest(const Graph& g, std::size_t trees,
                              const std::function<void(const EdgeSet&)>& visit) {
  const std::size_t n = g.num_vertices();
  if (trees == 0 || trees > n) return;
  const std::size_t target = n - trees;
  const std::size_t m = g.num_edges();
  EdgeSet chosen(m);
  std::function<void(std::size_t, DisjointSets&, std::size_t)> rec =
      [&](std::size_t i, DisjointSets& ds, std::size_t count) {
        if (count == target) {
          visit(chosen);
          return;
        }
        if (m - i < target - count) return;
        const Edge& e = g.edge(static_cast<EdgeId>(i));
        if (!e.is_loop() && ds.find(e.u) != ds.find(e.v)) {
          DisjointSets with = ds;
          with.unite(e.u, e.v);
          chosen.insert(static_cast<EdgeId>(i));
          rec(i + 1, with, count + 1);
          chosen.erase(static_cast<EdgeId>(i));
        }
        rec(i + 1, ds, count);
      };
  DisjointSets ds(n);
  rec(0, ds, 0);
}

std::vector<EdgeSet> enumerate_compatible_forests(const Graph& g, const VertexPartition& parts) {
  validate_partition(g, parts);
  std::vector<EdgeSet> out;
  for_each_spanning_forest(g, parts.size(), [&](const EdgeSet& f) {
    if (compatible_with_shape(analyze_forest(g, f), parts)) out.push_back(f);
  });
  return out;
}

ForestView::ForestView(const Graph& g, const EdgeSet& edges)
    : edges_(edges), shape_(analyze_forest(g, edges)), adjacency_(g.num_vertices()) {
  edges.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    adjacency_[ed.u].push_back({e, ed.v});
    if (!ed.is_loop()) adjacency_[ed.v].push_back({e, ed.u});
  });
}

std::vector<Vertex> ForestView::tree_of(Vertex v) const {
  std::vector<Vertex> out;
  const auto comp = component(v);
  for (Vertex x = 0; x < shape_.component.size(); ++x) {
    if (shape_.component[x] == comp) out.push_back(x);
  }
  return out;
}

EdgeId ForestView::first_edge_towards(Vertex from, Vertex to) const {
  if (from == to || component(from) != component(to)) {
    throw StructuralViolation("no tree path between " + std::to_string(from) + " and " +
                              std::to_string(to));
  }
  // Walk outward from `to`; the edge by which `from` is reached points back
  // along the path towards `to`.
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<Vertex> stack{to};
  seen[to] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[x]) {
      if (seen[inc.other]) continue;
      if (inc.other == from) return inc.edge;
      seen[inc.other] = 1;
      stack.push_back(inc.other);
    }
  }
  throw InternalInconsistency("tree path search failed");
}

std::vector<std::vector<Vertex>> ForestView::branches_without(Vertex u) const {
  std::vector<std::vector<Vertex>> out;
  for (const auto& start : adjacency_.at(u)) {
    std::vector<Vertex> branch{start.other};
    std::vector<Vertex> stack{start.other};
    std::vector<char> seen(adjacency_.size(), 0);
    seen[u] = 1;
    seen[start.other] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : adjacency_[x]) {
        if (seen[inc.other]) continue;
        seen[inc.other] = 1;
        branch.push_back(inc.other);
        stack.push_back(inc.other);
      }
    }
    std::sort(branch.begin(), branch.end());
    out.push_back(std::move(branch));
  }
  return out;
}

std::vector<std::vector<Vertex>> ForestView::components_without(
    Vertex seed, std::span<const Vertex> removed) const {
  std::vector<char> blocked(adjacency_.size(), 0);
  for (Vertex r : removed) blocked[r] = 1;
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(adjacency_.size(), 0);
  for (Vertex start : tree_of(seed)) {
    if (blocked[start] || seen[start]) continue;
    std::vector<Vertex> comp{start};
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : adjacency_[x]) {
        if (blocked[inc.other] || seen[inc.other]) continue;
        seen[inc.other] = 1;
        comp.push_back(inc.other);
        stack.push_back(inc.other);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace c2lab
