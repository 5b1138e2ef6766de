#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "c2lab/edge_set.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

/// A set partition of some marked vertices. Parts must be non-empty and
/// pairwise disjoint; vertices outside every part are unconstrained.
using VertexPart = std::vector<Vertex>;
using VertexPartition = std::vector<VertexPart>;

/// Throws InvalidInput unless the parts are non-empty, disjoint, in range.
void validate_partition(const Graph& g, const VertexPartition& parts);

/// Minimal union-find for enumeration inner loops.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  Vertex find(Vertex x);
  /// False if already joined.
  bool unite(Vertex a, Vertex b);
  std::size_t count() const noexcept { return components_; }

 private:
  std::vector<Vertex> parent_;
  std::size_t components_;
};

/// Component structure of the spanning subgraph (V, edges).
struct ForestShape {
  std::vector<std::uint32_t> component;  // per vertex, dense ids in first-seen order
  std::size_t num_components = 0;
  bool acyclic = false;
};

ForestShape analyze_forest(const Graph& g, const EdgeSet& edges);

bool is_spanning_tree(const Graph& g, const EdgeSet& edges);

/// True iff `edges` is a spanning forest with exactly |parts| trees, each
/// part inside one tree and distinct parts in distinct trees.
bool is_compatible_forest(const Graph& g, const EdgeSet& edges, const VertexPartition& parts);

/// Two-part form of is_compatible_forest. Throws InvalidInput unless `parts`
/// has exactly two disjoint parts.
bool is_compatible_2forest(const Graph& g, const EdgeSet& edges, const VertexPartition& parts);

/// Visits every spanning tree of a connected graph exactly once, in a
/// deterministic order, by include/exclude backtracking over the edge list.
/// An edge closing a cycle among included edges is forced out; exclusion is
/// only explored when the edge is not a bridge of the remaining graph.
/// Self-loops are never in a tree. Throws InvalidInput on disconnected input.
void for_each_spanning_tree(const Graph& g, const std::function<void(const EdgeSet&)>& visit);

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g);

/// Visits every acyclic edge set with exactly n - k edges, i.e. every
/// spanning forest with k trees.
void for_each_spanning_forest(const Graph& g, std::size_t trees,
                              const std::function<void(const EdgeSet&)>& visit);

/// All spanning forests compatible with `parts` (|parts| trees).
std::vector<EdgeSet> enumerate_compatible_forests(const Graph& g, const VertexPartition& parts);

/// Adjacency view of one edge subset, used to walk the trees of a forest.
class ForestView {
 public:
  ForestView(const Graph& g, const EdgeSet& edges);

  const EdgeSet& edges() const noexcept { return edges_; }
  std::uint32_t component(Vertex v) const { return shape_.component.at(v); }
  std::size_t num_components() const noexcept { return shape_.num_components; }
  bool acyclic() const noexcept { return shape_.acyclic; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }

  /// Vertices in the same tree as v, ascending.
  std::vector<Vertex> tree_of(Vertex v) const;

  /// First edge on the tree path from `from` to `to`. Both must lie in the
  /// same tree and differ.
  EdgeId first_edge_towards(Vertex from, Vertex to) const;

  /// Vertex sets of the components of tree_of(u) minus u, one per edge at u.
  std::vector<std::vector<Vertex>> branches_without(Vertex u) const;

  /// Components of tree_of(seed) after removing all of `removed`.
  std::vector<std::vector<Vertex>> components_without(Vertex seed,
                                                      std::span<const Vertex> removed) const;

 private:
  EdgeSet edges_;
  ForestShape shape_;
  std::vector<std::vector<Incidence>> adjacency_;
};

}  // namespace c2lab
