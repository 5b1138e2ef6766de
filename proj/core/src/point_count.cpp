#include "c2lab/point_count.hpp"

#include <algorithm>
#include <thread>

#include "c2lab/edge_partitions.hpp"
#include "c2lab/error.hpp"

namespace c2lab {

namespace {

std::uint64_t count_chunk(const PolynomialHandle& h, const PrimeField& field,
                          const AssignmentSpace& space, const std::vector<EdgeId>& vars,
                          AssignmentSpace::Chunk chunk) {
  if (chunk.begin == chunk.end) return 0;
  auto eval = h.evaluator(field);
  std::vector<Residue> tuple(vars.size());
  std::vector<Residue> values(h.graph().num_edges(), 0);
  space.decode(chunk.begin, tuple);
  std::uint64_t zeros = 0;
  for (std::uint64_t i = chunk.begin; i < chunk.end; ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) values[vars[j]] = tuple[j];
    if (eval(values) == 0) ++zeros;
    space.next(tuple);
  }
  return zeros;
}

}  // namespace

std::uint64_t count_zeros(const PolynomialHandle& h, const PrimeField& field,
                          const CountOptions& opts) {
  const auto vars = h.variable_list();
  const AssignmentSpace space(vars.size(), field.prime(), opts.budget);
  const unsigned workers = std::max(1U, opts.threads);
  if (workers == 1 || space.size() < 4096) {
    return count_chunk(h, field, space, vars, {0, space.size()});
  }
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < workers; ++k) {
    pool.emplace_back([&, k] {
      partial[k] = count_chunk(h, field, space, vars, space.chunk(k, workers));
    });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto z : partial) total += z;
  return total;
}

RouteResult c2_direct(const Graph& g, const PrimeField& field, const CountOptions& opts) {
  if (g.num_vertices() < 3 || !g.is_connected()) {
    throw InvalidInput("c2 needs a connected graph with at least 3 vertices");
  }
  const std::uint64_t zeros = count_zeros(PolynomialHandle::kirchhoff(g), field, opts);
  const std::uint64_t p = field.prime();
  if (zeros % (p * p) != 0) {
    throw InternalInconsistency("[Psi]_" + std::to_string(p) + " = " + std::to_string(zeros) +
                                " is not divisible by p^2");
  }
  return {static_cast<Residue>(zeros / (p * p) % p), zeros};
}

RouteResult c2_denom(const Graph& gminus, EdgeId e1, EdgeId e2, EdgeId e3,
                     const PrimeField& field, const CountOptions& opts) {
  if (gminus.num_vertices() == 0 || !gminus.is_connected()) {
    throw InvalidInput("denominator route needs a connected graph");
  }
  if (gminus.num_edges() < 3) throw InvalidInput("denominator route needs at least 3 edges");
  if (2 * gminus.loop_number() > static_cast<std::int64_t>(gminus.num_edges())) {
    throw InvalidInput("denominator route needs 2 * loop number <= edge count");
  }
  if (e1 == e2 || e1 == e3 || e2 == e3) throw InvalidInput("denominator edges must be distinct");
  const std::uint64_t zeros = count_zeros(denominator_D3(gminus, e1, e2, e3), field, opts);
  return {field.neg(static_cast<Residue>(zeros % field.prime())), zeros};
}

RouteResult c2_denom(const Graph& gminus, const PrimeField& field, const CountOptions& opts) {
  const auto u = first_3valent_vertex(gminus);
  if (!u) throw InvalidInput("no 3-valent vertex for the default denominator edges");
  const auto red = reduce_at_3valent(gminus, *u);
  return c2_denom(gminus, red.e1, red.e2, red.e3, field, opts);
}

RouteResult c2_partition(const Graph& g, Vertex v, const PrimeField& field,
                         const CountOptions& opts) {
  const auto gminus = decomplete(g, v).graph;
  if (!gminus.is_connected()) throw InvalidInput("decompletion is disconnected");
  if (2 * gminus.loop_number() != static_cast<std::int64_t>(gminus.num_edges())) {
    throw InvalidInput("partition route needs |E(G-v)| = 2 * loop number");
  }
  const auto u = first_3valent_vertex(gminus);
  if (!u) throw InvalidInput("decompletion has no 3-valent vertex");
  const auto red = reduce_at_3valent(gminus, *u);
  const Graph& h = red.deletion.graph;
  const std::uint32_t p = field.prime();
  std::uint64_t count = 0;
  if (p == 2) {
    count = count_bipartitions(h, red.partition);
  } else {
    const std::vector<VertexPartition> parts(p - 1, red.partition);
    count = count_partition_tuples(h, p - 1, parts, opts.enumeration_budget);
  }
  return {field.neg(static_cast<Residue>(count % p)), count};
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::Direct: return "direct";
    case Route::Denom: return "denom";
    case Route::Partition: return "partition";
  }
  return "?";
}

bool C2Report::agree() const {
  std::optional<Residue> seen;
  for (const auto* r : {&direct, &denom, &partition}) {
    if (!r->has_value()) continue;
    if (seen && *seen != (*r)->c2) return false;
    seen = (*r)->c2;
  }
  return true;
}

std::optional<Residue> C2Report::value() const {
  if (!agree()) return std::nullopt;
  for (const auto* r : {&direct, &denom, &partition}) {
    if (r->has_value()) return (*r)->c2;
  }
  return std::nullopt;
}

C2Report compute_decompletion(const Graph& g, Vertex v, const PrimeField& field,
                              RouteSelection routes, const CountOptions& opts,
                              std::string graph_id) {
  if (!g.is_regular(4)) throw InvalidInput("decompletion mode needs a 4-regular graph");
  if (!g.is_connected()) throw InvalidInput("decompletion mode needs a connected graph");
  C2Report rep;
  rep.graph_id = std::move(graph_id);
  rep.vertex = v;
  rep.prime = field.prime();
  const auto gminus = decomplete(g, v).graph;
  if (routes.direct) rep.direct = c2_direct(gminus, field, opts);
  if (routes.denom) rep.denom = c2_denom(gminus, field, opts);
  if (routes.partition) rep.partition = c2_partition(g, v, field, opts);
  return rep;
}

}  // namespace c2lab
