#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "c2lab/edge_set.hpp"
#include "c2lab/finite_field.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/spanning.hpp"

namespace c2lab {

/// Values of the edge variables, indexed by edge id. Entries for edges that a
/// polynomial does not depend on are ignored.
struct Assignment {
  PrimeField field;
  std::vector<Residue> values;

  Assignment(PrimeField f, std::vector<Residue> v) : field(std::move(f)), values(std::move(v)) {}
};

/// Row/column order of the expanded Laplacian: edges by ascending rank, then
/// vertices ascending, with the incidence row of `removed_vertex` dropped.
/// Edge e is oriented from edge(e).u to edge(e).v.
struct Orientation {
  std::vector<std::uint32_t> edge_rank;  // empty: input order
  std::optional<Vertex> removed_vertex;  // empty: highest index

  static Orientation canonical() { return {}; }
};

/// Psi_G(a) via the matrix-tree theorem. Throws InvalidInput unless G is
/// connected and `a` covers every edge.
Residue eval_kirchhoff(const Graph& g, const Assignment& a, const Orientation& o = {});

/// Psi_G(a) as an explicit sum over spanning trees.
Residue eval_kirchhoff_by_trees(const Graph& g, const Assignment& a);

/// Dodgson polynomial: rows I and columns J (edges) removed from the expanded
/// Laplacian, alpha_e = 0 for e in K. Zero when |I| != |J|. The sign is
/// (-1)^(|V|-1) times the minor in the given orientation, so it is fixed per
/// (G, I, J, K, orientation).
Residue eval_dodgson(const Graph& g, std::span<const EdgeId> rows, std::span<const EdgeId> cols,
                     std::span<const EdgeId> zeroed, const Assignment& a,
                     const Orientation& o = {});

/// Spanning forest polynomial of the vertex partition P.
Residue eval_forest(const Graph& g, const VertexPartition& parts, const Assignment& a);

/// A named polynomial in the edge variables of one graph, evaluated pointwise.
class PolynomialHandle {
 public:
  enum class Kind { Kirchhoff, Dodgson, SpanningForest, Product };

  static PolynomialHandle kirchhoff(const Graph& g, const Orientation& o = {});
  static PolynomialHandle dodgson(const Graph& g, std::vector<EdgeId> rows,
                                  std::vector<EdgeId> cols, std::vector<EdgeId> zeroed,
                                  const Orientation& o = {});
  static PolynomialHandle spanning_forest(const Graph& g, VertexPartition parts);
  /// All factors must share the same base graph.
  static PolynomialHandle product(std::vector<PolynomialHandle> factors);

  Kind kind() const noexcept;
  const Graph& graph() const noexcept;
  /// Edge ids the polynomial depends on (as a set of formal variables).
  const EdgeSet& variables() const noexcept;
  std::vector<EdgeId> variable_list() const;

  /// Per-thread evaluation state with reusable scratch buffers.
  class Evaluator {
   public:
    Evaluator(const PolynomialHandle& h, const PrimeField& field);
    /// `values` is indexed by edge id of the base graph.
    Residue operator()(std::span<const Residue> values);

   private:
    struct State;
    std::shared_ptr<State> state_;
  };

  Evaluator evaluator(const PrimeField& field) const { return Evaluator(*this, field); }
  Residue evaluate(const Assignment& a) const;

  struct Impl;

 private:
  explicit PolynomialHandle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// D^3_G(1,2,3) = Psi^{13,23} * Psi^{1,2}_3 for three distinct edges.
PolynomialHandle denominator_D3(const Graph& g, EdgeId e1, EdgeId e2, EdgeId e3);

/// Data of the reduction at a 3-valent vertex u of G - v.
struct ThreeValentReduction {
  VertexDeletion deletion;    // (G - v) - u
  VertexPartition partition;  // {{u3},{u1,u2}} in the numbering of deletion.graph
  Vertex u = 0;
  Vertex u1 = 0, u2 = 0, u3 = 0;  // neighbours of u, numbering of the input graph
  EdgeId e1 = 0, e2 = 0, e3 = 0;  // edge u-u_i, numbering of the input graph
};

/// Role order: u3 is the smallest neighbour, u1 < u2 the others. Throws
/// InvalidInput if u is not 3-valent or has a repeated neighbour.
ThreeValentReduction reduce_at_3valent(const Graph& g, Vertex u);

/// Same, with u3 chosen by the caller (must be a neighbour of u).
ThreeValentReduction reduce_at_3valent(const Graph& g, Vertex u, Vertex u3);

/// Smallest 3-valent vertex, if any.
std::optional<Vertex> first_3valent_vertex(const Graph& g);

}  // namespace c2lab
