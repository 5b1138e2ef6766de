#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "c2lab/finite_field.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/polynomials.hpp"

namespace c2lab {

struct CountOptions {
  std::uint64_t budget = AssignmentSpace::kDefaultBudget;  // point evaluations
  unsigned threads = 1;
  std::uint64_t enumeration_budget = 10'000'000;  // partition tuples / search nodes
};

/// Number of zeros of h in F_p^vars(h). The space is split into contiguous
/// chunks whose subtotals are summed in chunk order.
std::uint64_t count_zeros(const PolynomialHandle& h, const PrimeField& field,
                          const CountOptions& opts = {});

/// A c2 residue together with the raw count it was derived from.
struct RouteResult {
  Residue c2 = 0;
  std::uint64_t raw = 0;  // [Psi]_p, [D3]_p, or the partition count
};

/// c2 = [Psi_G]_p / p^2 mod p. Throws InternalInconsistency if p^2 does not
/// divide the count.
RouteResult c2_direct(const Graph& g, const PrimeField& field, const CountOptions& opts = {});

/// c2 = -[Psi^{13,23} Psi^{1,2}_3]_p mod p for three distinct edges.
RouteResult c2_denom(const Graph& gminus, EdgeId e1, EdgeId e2, EdgeId e3,
                     const PrimeField& field, const CountOptions& opts = {});

/// Same, with the three edges at the smallest 3-valent vertex in the role
/// order of reduce_at_3valent.
RouteResult c2_denom(const Graph& gminus, const PrimeField& field, const CountOptions& opts = {});

/// c2(G - v) from edge-partition counts on G - {u, v}, u the smallest
/// 3-valent vertex of G - v. Requires |E(G - v)| = 2 loop_number(G - v).
RouteResult c2_partition(const Graph& g, Vertex v, const PrimeField& field,
                         const CountOptions& opts = {});

enum class Route { Direct, Denom, Partition };
std::string_view to_string(Route r);

struct C2Report {
  std::string graph_id;
  Vertex vertex = 0;
  std::uint32_t prime = 0;
  std::optional<RouteResult> direct;
  std::optional<RouteResult> denom;
  std::optional<RouteResult> partition;

  /// True iff every computed route has the same residue.
  bool agree() const;
  std::optional<Residue> value() const;
};

struct RouteSelection {
  bool direct = true;
  bool denom = true;
  bool partition = true;
};

/// All selected routes for the decompletion G - v of a 4-regular graph.
C2Report compute_decompletion(const Graph& g, Vertex v, const PrimeField& field,
                              RouteSelection routes = {}, const CountOptions& opts = {},
                              std::string graph_id = {});

}  // namespace c2lab
