#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c2lab/edge_partitions.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

enum class ControlMode {
  InTwoPart,        // x lies in the 2-part after removing the control vertex
  SelfOrSingleton,  // x is the control vertex or lies in a singleton
};

struct ControlSpec {
  Vertex special = 0;
  ControlMode mode = ControlMode::InTwoPart;
};

/// The unique vertex u of the tree t of phi containing `part` (4 vertices)
/// such that t - u splits the part into a 2-part, a singleton and possibly a
/// second singleton, with the special vertex placed as `spec` requires.
/// Checks that u is a leaf of psi and is 2-valent in t and in the part, or
/// 3-valent in t and outside it. Throws StructuralViolation otherwise.
Vertex find_control_vertex(const Graph& g, const EdgeBipartition& b,
                           const std::vector<Vertex>& part, ControlSpec spec);

/// The unique unordered pair (v < w) whose removal from the tree of phi
/// containing `part` (5 vertices) leaves every part vertex alone. Checks
/// non-adjacency in g, valency in t, and that both are leaves of psi.
std::pair<Vertex, Vertex> find_two_control_vertices(const Graph& g, const EdgeBipartition& b,
                                                    const std::vector<Vertex>& part);

enum class SwapCase {
  TwoValent,
  SStep1,
  SStep2i,
  SStep2ii,
  R1i,
  R1ii,
  R1Both,
  R1Crossed,  // both stay in and each path runs through the other control vertex
  R2,
  RControlIn,
  RControlOut,
};

std::string_view to_string(SwapCase c);

struct SwapTrace {
  SwapCase kind = SwapCase::TwoValent;
  std::vector<std::pair<EdgeId, EdgeId>> swaps;  // (edge leaving psi, edge leaving phi)
  std::vector<Vertex> controls;

  std::string describe() const;
};

struct InvolutionResult {
  EdgeBipartition out;
  SwapTrace trace;
};

/// Exchanges the two edges at a 2-valent vertex c between psi and phi. Each
/// side must hold exactly one of them.
InvolutionResult swap_two_valent(const Graph& g, const EdgeBipartition& b, Vertex c);

/// Exchanges the edges at c between forest i and tree j. Every part must hold
/// exactly one edge at c and the two parts must hold different ones.
GeneralEdgePartition swap_two_valent(const Graph& g, const GeneralEdgePartition& gp, Vertex c,
                                     std::size_t forest, std::size_t tree);

/// The S-case map on the union of S_{{x},{c,*,*,*}}, x in {a,b,d,e}.
InvolutionResult s_case_involution(const PairGraph& s, const EdgeBipartition& b);

/// The conjugated map on the union of S_{{c,x},{*,*,*}}.
InvolutionResult s_case_involution_variant(const PairGraph& s, const EdgeBipartition& b);

/// The one-control-vertex R-case map on the six sets R_{{y,z},{x,*,*,*}}
/// with {x,y,z} = {a,b,c} or {d,e,f}.
InvolutionResult r_case_single_control_involution(const PairGraph& r, const EdgeBipartition& b);

/// The two-control-vertex R-case map on the six sets R_{{x},{*,*,*,*,*}}.
InvolutionResult r_case_involution(const PairGraph& r, const EdgeBipartition& b);

/// Orbit of gp under swapping the edges at c between forest i and any tree
/// holding the other edge at c. Sorted, duplicate-free.
std::vector<GeneralEdgePartition> orbit_of(const Graph& g, const GeneralEdgePartition& gp,
                                           std::size_t forest, Vertex c);

struct SweepReport {
  std::string name;
  std::uint64_t domain_size = 0;
  std::uint64_t fixed_points = 0;
  std::uint64_t involution_failures = 0;
  std::uint64_t membership_failures = 0;
  std::uint64_t stability_failures = 0;
  std::uint64_t errors = 0;  // exceptions raised by the map
  std::map<std::string, std::uint64_t> cases;
  std::vector<std::string> failures;  // first few, with traces

  std::uint64_t violations() const noexcept {
    return fixed_points + involution_failures + membership_failures + stability_failures + errors;
  }
  bool parity_even() const noexcept { return domain_size % 2 == 0; }
  bool ok() const noexcept { return violations() == 0 && parity_even(); }
};

SweepReport sweep_s_swap_c(const PairGraph& s);
SweepReport sweep_s_bijection(const PairGraph& s);
SweepReport sweep_s_bijection_variant(const PairGraph& s);
SweepReport sweep_r_control_bijection(const PairGraph& r);
SweepReport sweep_r_bijection(const PairGraph& r);

struct OrbitSweepReport {
  std::uint32_t prime = 0;
  Vertex c = 0;
  std::size_t forest = 0;
  std::uint64_t size_first = 0;   // |G_{..P_i..}|
  std::uint64_t size_second = 0;  // |G_{..P_i^c..}|
  std::uint64_t orbits = 0;
  std::map<std::uint64_t, std::uint64_t> orbit_sizes;  // size -> number of orbits
  std::uint64_t swap_in_first = 0;   // elements of swap-in orbits, per class
  std::uint64_t swap_in_second = 0;
  std::uint64_t size_failures = 0;
  std::uint64_t split_failures = 0;
  std::uint64_t closure_failures = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept;
};

/// Orbit decomposition of G_{P_1..P_i..P_k} u G_{P_1..P_i^c..P_k} at prime
/// k + 1, checking orbit sizes binom(p, k'), the class split of each orbit,
/// and the class totals modulo p.
OrbitSweepReport sweep_orbits(const Graph& g, const std::vector<VertexPartition>& forest_parts,
                              std::size_t forest, Vertex c, std::uint64_t budget = 10'000'000);

}  // namespace c2lab
