#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c2lab/edge_set.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/spanning.hpp"

namespace c2lab {

/// (psi, phi): psi a spanning tree, phi = E \ psi.
struct EdgeBipartition {
  EdgeSet psi;
  EdgeSet phi;

  friend bool operator==(const EdgeBipartition&, const EdgeBipartition&) = default;
};

struct EdgeBipartitionHash {
  std::size_t operator()(const EdgeBipartition& b) const noexcept {
    return b.psi.hash() * 0x9e3779b97f4a7c15ULL ^ b.phi.hash();
  }
};

/// psi is a spanning tree, phi its complement and a spanning 2-forest.
bool is_valid_bipartition(const Graph& g, const EdgeBipartition& b);

/// Number of (psi, phi) with psi a spanning tree and phi = E \ psi a spanning
/// 2-forest compatible with the 2-part partition P. Parts may cover only some
/// vertices; the rest are free.
std::uint64_t count_bipartitions(const Graph& g, const VertexPartition& parts);

/// Every (psi, phi) whose phi is a spanning 2-forest, with the split of the
/// marked vertices that phi induces.
class BipartitionCatalog {
 public:
  BipartitionCatalog(const Graph& g, std::vector<Vertex> marked);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& marked() const noexcept { return marked_; }
  std::size_t size() const noexcept { return items_.size(); }
  const EdgeBipartition& item(std::size_t i) const { return items_.at(i); }
  /// Bit k set iff marked[k] lies in the tree of phi that contains marked[0].
  std::uint32_t mask(std::size_t i) const { return masks_.at(i); }

  /// Whether a mask is compatible with a partition of some marked vertices
  /// given by per-part bitmasks over the marked list.
  static bool compatible(std::uint32_t mask, std::uint32_t part0, std::uint32_t part1);

  std::uint64_t count(const VertexPartition& parts) const;
  std::vector<std::size_t> members(const VertexPartition& parts) const;
  /// Mask of a bipartition, or nullopt if it is not in the catalog.
  std::optional<std::uint32_t> mask_of(const EdgeBipartition& b) const;
  std::pair<std::uint32_t, std::uint32_t> part_masks(const VertexPartition& parts) const;

 private:
  Graph graph_;
  std::vector<Vertex> marked_;
  std::vector<EdgeBipartition> items_;
  std::vector<std::uint32_t> masks_;
};

/// (psi_1..psi_k, phi_1..phi_k), k = p - 1, with every edge used exactly k
/// times in total. Parts are edge sets: two copies of one edge can never lie
/// in the same tree or forest.
struct GeneralEdgePartition {
  std::vector<EdgeSet> trees;
  std::vector<EdgeSet> forests;

  std::uint32_t prime() const noexcept { return static_cast<std::uint32_t>(trees.size() + 1); }
  friend bool operator==(const GeneralEdgePartition&, const GeneralEdgePartition&) = default;
};

struct GeneralEdgePartitionHash {
  std::size_t operator()(const GeneralEdgePartition& g) const noexcept;
};

/// Full check: sizes, multiplicities, trees, and forest compatibility with
/// forest_parts[i].
bool is_valid_general_partition(const Graph& g, const GeneralEdgePartition& gp,
                                const std::vector<VertexPartition>& forest_parts);

/// Visits every tuple with `num_trees` spanning trees and one compatible
/// spanning 2-forest per entry of forest_parts (|forest_parts| = num_trees),
/// each edge in exactly num_trees parts. Throws BudgetExceeded once more than
/// `budget` search nodes are expanded.
void for_each_partition_tuple(const Graph& g, std::size_t num_trees,
                              const std::vector<VertexPartition>& forest_parts,
                              const std::function<void(const GeneralEdgePartition&)>& visit,
                              std::uint64_t budget = 10'000'000);

std::uint64_t count_partition_tuples(const Graph& g, std::size_t num_trees,
                                     const std::vector<VertexPartition>& forest_parts,
                                     std::uint64_t budget = 10'000'000);

/// Parses a split such as "c|ab" into vertices via the labels of a pair graph.
VertexPartition partition_from_labels(const PairGraph& pg, std::string_view spec);

/// "{c},{a,b}" style rendering of a label spec.
std::string format_label_partition(std::string_view spec);

struct CountEntry {
  std::string label;
  std::uint64_t count = 0;
};

struct CountIdentity {
  std::string name;
  std::uint32_t modulus = 2;
  std::uint32_t value = 0;     // computed residue
  std::uint32_t expected = 0;  // residue the identity predicts
  bool holds() const noexcept { return value == expected; }
};

struct CountReport {
  PairCase kind = PairCase::AllShared;
  std::uint32_t prime = 2;
  std::vector<CountEntry> counts;
  std::vector<CountIdentity> identities;
  std::optional<std::uint32_t> c2_v;  // c2(G - v) from the counts
  std::optional<std::uint32_t> c2_w;

  std::uint64_t count(std::string_view label) const;
  bool all_hold() const;
};

/// s_P for every 2-part split of {a,..,e} plus the partial splits giving
/// c2(G - v) and c2(G - w), and the parity identities among them.
CountReport s_case_counts(const PairGraph& s);

/// r_P for the twelve terms of the R difference, the partial splits giving
/// c2(G - v) and c2(G - w), and the parity identities.
CountReport r_case_counts(const PairGraph& r);

/// t-counts at prime p: t_{P^l Q^(p-1-l)}, t_{P'^l Q^(p-1-l)} and
/// t_{(P^b)^l Q^(p-1-l)} for l = 0..p-1, the binomial-weighted c2 values and
/// the congruences between them.
CountReport t_case_counts(const PairGraph& t, std::uint32_t p, std::uint64_t budget = 10'000'000);

}  // namespace c2lab
