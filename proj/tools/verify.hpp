#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "c2lab/edge_partitions.hpp"
#include "c2lab/graph.hpp"
#include "c2lab/involutions.hpp"
#include "c2lab/point_count.hpp"

namespace c2lab::verify {

struct CorpusEntry {
  std::string id;
  Graph graph;
};

struct Corpus {
  std::vector<CorpusEntry> graphs;
  std::vector<std::string> warnings;  // skipped entries
};

/// A file with one graph6 string per line, or a directory of JSON edge lists
/// (read in file-name order). Malformed entries are skipped with a warning.
Corpus load_corpus(const std::filesystem::path& path);

/// A single graph: JSON edge list if the file parses as JSON, otherwise the
/// first graph6 line.
Graph load_graph(const std::filesystem::path& path);

// ---------------------------------------------------------------------------

struct VertexResult {
  std::optional<Vertex> vertex;  // nullopt: the input graph itself
  std::uint32_t prime = 2;
  C2Report report;
};

struct ComputeResult {
  std::string graph_id;
  std::string mode;  // "decompletion" or "graph"
  std::vector<VertexResult> results;
  bool ok() const;
};

/// Decompletion mode runs the selected routes at each vertex (or only at
/// `vertex`). Graph mode runs direct and denom on the graph itself; with
/// `strict` a selected route that does not apply is an error, otherwise it
/// is left out.
ComputeResult compute(const std::string& id, const Graph& g, const std::vector<std::uint32_t>& primes,
                      RouteSelection routes, std::optional<Vertex> vertex, bool decompletion,
                      bool strict, const CountOptions& opts);

struct CompletionEntry {
  std::string graph_id;
  std::uint32_t prime = 2;
  std::vector<C2Report> vertices;
  std::vector<std::string> pair_cases;  // "v-w:T" per adjacent pair
  bool verdict = false;
  std::string tag;    // "theorem-backed" or "empirical"
  std::string error;     // non-empty when the graph was not decided
  bool skipped = false;  // input not a completion
  bool budget_refused = false;
};

struct CompletionReport {
  std::vector<CompletionEntry> entries;
  std::vector<std::string> warnings;
  bool violations() const;
  bool budget_refusals() const;
};

CompletionReport verify_completion(const Corpus& corpus, const std::vector<std::uint32_t>& primes,
                                   RouteSelection routes, const CountOptions& opts);

struct PairSweep {
  std::string graph_id;
  Vertex v = 0;
  Vertex w = 0;
  PairCase kind = PairCase::AllShared;
  std::optional<CountReport> counts;
  std::vector<SweepReport> sweeps;
  std::vector<OrbitSweepReport> orbits;
  std::vector<std::string> orbit_labels;
  std::string error;
  bool budget_refused = false;
};

struct InvolutionReport {
  std::uint32_t prime = 2;
  std::vector<PairSweep> pairs;
  std::vector<std::string> warnings;
  bool violations() const;
  bool budget_refusals() const;
};

/// p = 2: the first S pair and the first R pair of each graph get the count
/// identities and all involution sweeps. p > 2: the first T pair of each
/// graph gets the t-count identities and orbit sweeps.
InvolutionReport sweep_involutions(const Corpus& corpus, std::uint32_t prime,
                                   std::uint64_t budget);

struct IdentityCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;  // first few failures
};

struct IdentityReport {
  std::uint64_t seed = 0;
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// Random-point polynomial identities on seeded random graphs, plus the
/// Chevalley-Warning coefficient check on random dense polynomials.
IdentityReport check_identities(std::uint64_t seed, std::size_t rounds = 200);

// ---------------------------------------------------------------------------

nlohmann::json to_json(const ComputeResult& r);
nlohmann::json to_json(const CompletionReport& r);
nlohmann::json to_json(const InvolutionReport& r);
nlohmann::json to_json(const IdentityReport& r);

std::string to_table(const ComputeResult& r);
std::string to_table(const CompletionReport& r);
std::string to_table(const InvolutionReport& r);
std::string to_table(const IdentityReport& r);

}  // namespace c2lab::verify
