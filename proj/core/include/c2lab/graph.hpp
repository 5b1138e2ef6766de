#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "c2lab/edge_set.hpp"

namespace c2lab {

struct Edge {
  Vertex u;
  Vertex v;

  bool is_loop() const noexcept { return u == v; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  EdgeId edge;
  Vertex other;
};

/// Undirected multigraph on vertices 0..n-1. Edge ids are the positions in
/// the edge list, so they are unique and contiguous by construction.
/// Parallel edges and self-loops are allowed; immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edges of v, one entry per edge end (a self-loop appears twice).
  std::span<const Incidence> incident(Vertex v) const { return incidence_.at(v); }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

  /// Distinct neighbours of v other than v itself, ascending.
  std::vector<Vertex> neighbours(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;

  /// |E| - |V| + 1.
  std::int64_t loop_number() const noexcept {
    return static_cast<std::int64_t>(edges_.size()) - static_cast<std::int64_t>(num_vertices_) + 1;
  }

  bool is_connected() const;
  bool is_simple() const;
  bool is_regular(std::size_t k) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// Result of deleting vertices: the new graph plus maps back to the source.
/// Surviving vertices are renumbered densely in ascending original order.
struct VertexDeletion {
  Graph graph;
  std::vector<Vertex> new_to_old_vertex;
  std::vector<std::optional<Vertex>> old_to_new_vertex;
  std::vector<EdgeId> new_to_old_edge;
};

VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// G - v. For a 4-regular G this is the decompletion at v.
VertexDeletion decomplete(const Graph& g, Vertex v);

/// G with edge e removed (G \ e).
Graph delete_edge(const Graph& g, EdgeId e);

/// G / e: endpoints of e merged, e itself dropped. Other edges between the two
/// endpoints become self-loops and are kept.
Graph contract_edge(const Graph& g, EdgeId e);

// ---------------------------------------------------------------------------
// Adjacent-pair classification in a 4-regular graph.

enum class PairCase { AllShared, T, S, R };

std::string_view to_string(PairCase c);

/// Labels of the neighbours of an adjacent pair v,w, in the graph's own
/// numbering. Conventions:
///   T: w ~ {a,b,c,v}, v ~ {b,c,d,w}   marked = {a,b,c,d}
///   S: w ~ {a,b,c,v}, v ~ {c,d,e,w}   marked = {a,b,c,d,e}
///   R: w ~ {a,b,c,v}, v ~ {d,e,f,w}   marked = {a,b,c,d,e,f}
///   AllShared: marked = the three common neighbours.
/// Interchangeable labels are assigned in ascending vertex order.
struct CaseLabel {
  PairCase kind = PairCase::AllShared;
  Vertex v = 0;
  Vertex w = 0;
  std::vector<Vertex> marked;

  /// Vertex carrying label 'a', 'b', ...
  Vertex label(char name) const;
};

CaseLabel classify_adjacent_pair(const Graph& g, Vertex v, Vertex w);

/// G - {v,w} with the marked labels translated into the new numbering.
struct PairGraph {
  CaseLabel label;
  Graph graph;
  std::vector<Vertex> marked;  // same order as label.marked, new numbering
  std::vector<Vertex> new_to_old_vertex;

  Vertex marked_label(char name) const;
};

PairGraph split_adjacent_pair(const Graph& g, Vertex v, Vertex w);

// ---------------------------------------------------------------------------
// Ingestion and emission.

/// Parses one graph6 line (simple graphs, the standard short and 4-byte
/// size headers). Edges are numbered in lexicographic (u < v) order.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// `{"n": int, "edges": [[u,v], ...]}`. Edge order and multiplicity are kept.
Graph parse_edge_list(const nlohmann::json& document);
Graph parse_edge_list(std::string_view text);
nlohmann::json emit_edge_list(const Graph& g);

}  // namespace c2lab
