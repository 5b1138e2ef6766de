#include "c2lab/polynomials.hpp"

#include <algorithm>
#include <numeric>

#include "c2lab/error.hpp"

namespace c2lab {

namespace {

void check_edges(const Graph& g, std::span<const EdgeId> edges, const char* what) {
  for (EdgeId e : edges) {
    if (e >= g.num_edges()) {
      throw InvalidInput(std::string(what) + " edge " + std::to_string(e) + " out of range");
    }
  }
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput(std::string(what) + " edges repeat");
  }
}

std::vector<EdgeId> edge_order(const Graph& g, const Orientation& o) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  if (o.edge_rank.empty()) return order;
  if (o.edge_rank.size() != g.num_edges()) throw InvalidInput("edge rank size mismatch");
  std::vector<std::uint32_t> check = o.edge_rank;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) throw InvalidInput("edge ranks are not a permutation");
  }
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return o.edge_rank[a] < o.edge_rank[b]; });
  return order;
}

int incidence(const Edge& e, Vertex x) {
  if (e.is_loop()) return 0;
  if (x == e.u) return 1;
  if (x == e.v) return -1;
  return 0;
}

// Entries of an expanded-Laplacian minor in {-1,0,1}, with the positions that
// receive a variable value.
struct MinorTemplate {
  std::size_t size = 0;
  std::vector<std::int8_t> entries;
  std::vector<std::pair<std::size_t, EdgeId>> diagonal;
  bool negate = false;
};

MinorTemplate build_minor(const Graph& g, std::span<const EdgeId> rows_removed,
                          std::span<const EdgeId> cols_removed, const EdgeSet& zeroed,
                          const Orientation& o) {
  if (g.num_vertices() == 0) throw InvalidInput("expanded Laplacian of the empty graph");
  const Vertex removed = o.removed_vertex.value_or(static_cast<Vertex>(g.num_vertices() - 1));
  if (removed >= g.num_vertices()) throw InvalidInput("removed vertex out of range");

  EdgeSet drop_rows(g.num_edges());
  EdgeSet drop_cols(g.num_edges());
  for (EdgeId e : rows_removed) drop_rows.insert(e);
  for (EdgeId e : cols_removed) drop_cols.insert(e);

  struct Index {
    bool is_edge;
    std::uint32_t id;
  };
  std::vector<Index> rows;
  std::vector<Index> cols;
  for (EdgeId e : edge_order(g, o)) {
    if (!drop_rows.contains(e)) rows.push_back({true, e});
    if (!drop_cols.contains(e)) cols.push_back({true, e});
  }
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (x == removed) continue;
    rows.push_back({false, x});
    cols.push_back({false, x});
  }

  MinorTemplate t;
  t.size = rows.size();
  t.entries.assign(t.size * t.size, 0);
  t.negate = (g.num_vertices() - 1) % 2 == 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& ri = rows[r];
      const auto& ci = cols[c];
      const std::size_t pos = r * t.size + c;
      if (ri.is_edge && ci.is_edge) {
        if (ri.id == ci.id && !zeroed.contains(ri.id)) t.diagonal.emplace_back(pos, ri.id);
      } else if (ri.is_edge && !ci.is_edge) {
        t.entries[pos] = static_cast<std::int8_t>(incidence(g.edge(ri.id), ci.id));
      } else if (!ri.is_edge && ci.is_edge) {
        t.entries[pos] = static_cast<std::int8_t>(incidence(g.edge(ci.id), ri.id));
      }
    }
  }
  return t;
}

}  // namespace

struct PolynomialHandle::Impl {
  Kind kind = Kind::Kirchhoff;
  Graph graph;
  EdgeSet vars;
  bool identically_zero = false;
  MinorTemplate minor;
  std::vector<EdgeSet> forest_complements;
  std::vector<PolynomialHandle> factors;
};

PolynomialHandle PolynomialHandle::kirchhoff(const Graph& g, const Orientation& o) {
  if (g.num_vertices() == 0 || !g.is_connected()) {
    throw InvalidInput("Kirchhoff polynomial needs a connected graph");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Kirchhoff;
  impl->graph = g;
  impl->vars = EdgeSet::full(g.num_edges());
  impl->minor = build_minor(g, {}, {}, EdgeSet(g.num_edges()), o);
  return PolynomialHandle(std::move(impl));
}

PolynomialHandle PolynomialHandle::dodgson(const Graph& g, std::vector<EdgeId> rows,
                                           std::vector<EdgeId> cols, std::vector<EdgeId> zeroed,
                                           const Orientation& o) {
  check_edges(g, rows, "row");
  check_edges(g, cols, "column");
  check_edges(g, zeroed, "zeroed");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Dodgson;
  impl->graph = g;
  impl->vars = EdgeSet::full(g.num_edges());
  EdgeSet k(g.num_edges());
  for (EdgeId e : rows) impl->vars.erase(e);
  for (EdgeId e : cols) impl->vars.erase(e);
  for (EdgeId e : zeroed) {
    impl->vars.erase(e);
    k.insert(e);
  }
  if (rows.size() != cols.size()) {
    impl->identically_zero = true;
  } else {
    impl->minor = build_minor(g, rows, cols, k, o);
  }
  return PolynomialHandle(std::move(impl));
}

PolynomialHandle PolynomialHandle::spanning_forest(const Graph& g, VertexPartition parts) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::SpanningForest;
  impl->graph = g;
  impl->vars = EdgeSet::full(g.num_edges());
  for (const auto& f : enumerate_compatible_forests(g, parts)) {
    impl->forest_complements.push_back(f.complement());
  }
  return PolynomialHandle(std::move(impl));
}

PolynomialHandle PolynomialHandle::product(std::vector<PolynomialHandle> factors) {
  if (factors.empty()) throw InvalidInput("empty product of polynomials");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Product;
  impl->graph = factors.front().graph();
  impl->vars = EdgeSet(impl->graph.num_edges());
  for (const auto& f : factors) {
    if (!(f.graph() == impl->graph)) throw InvalidInput("product factors on different graphs");
    impl->vars |= f.variables();
    if (f.impl_->identically_zero) impl->identically_zero = true;
  }
  impl->factors = std::move(factors);
  return PolynomialHandle(std::move(impl));
}

PolynomialHandle::Kind PolynomialHandle::kind() const noexcept { return impl_->kind; }
const Graph& PolynomialHandle::graph() const noexcept { return impl_->graph; }
const EdgeSet& PolynomialHandle::variables() const noexcept { return impl_->vars; }
std::vector<EdgeId> PolynomialHandle::variable_list() const { return impl_->vars.to_vector(); }

struct PolynomialHandle::Evaluator::State {
  const Impl* impl = nullptr;
  std::shared_ptr<const Impl> keep_alive;
  PrimeField field;
  std::vector<Residue> base;
  std::vector<Residue> scratch;
  std::vector<Evaluator> factors;

  State(std::shared_ptr<const Impl> h, const PrimeField& f)
      : impl(h.get()), keep_alive(std::move(h)), field(f) {}
};

PolynomialHandle::Evaluator::Evaluator(const PolynomialHandle& h, const PrimeField& field)
    : state_(std::make_shared<State>(h.impl_, field)) {
  const Impl& impl = *h.impl_;
  if (impl.kind == Kind::Kirchhoff || (impl.kind == Kind::Dodgson && !impl.identically_zero)) {
    state_->base.resize(impl.minor.entries.size());
    std::transform(impl.minor.entries.begin(), impl.minor.entries.end(), state_->base.begin(),
                   [&](std::int8_t x) { return field.reduce(x); });
    state_->scratch.resize(state_->base.size());
  } else if (impl.kind == Kind::Product) {
    for (const auto& f : impl.factors) state_->factors.emplace_back(f, field);
  }
}

Residue PolynomialHandle::Evaluator::operator()(std::span<const Residue> values) {
  State& s = *state_;
  const Impl& impl = *s.impl;
  if (values.size() < impl.graph.num_edges()) throw InvalidInput("assignment too short");
  if (impl.identically_zero) return 0;
  switch (impl.kind) {
    case Kind::Kirchhoff:
    case Kind::Dodgson: {
      std::copy(s.base.begin(), s.base.end(), s.scratch.begin());
      for (const auto& [pos, e] : impl.minor.diagonal) s.scratch[pos] = values[e];
      const Residue d = det_in_place(s.field, s.scratch, impl.minor.size);
      return impl.minor.negate ? s.field.neg(d) : d;
    }
    case Kind::SpanningForest: {
      Residue sum = 0;
      for (const auto& comp : impl.forest_complements) {
        Residue term = 1 % s.field.prime();
        comp.for_each([&](EdgeId e) { term = s.field.mul(term, values[e]); });
        sum = s.field.add(sum, term);
      }
      return sum;
    }
    case Kind::Product: {
      Residue acc = 1 % s.field.prime();
      for (auto& f : s.factors) {
        acc = s.field.mul(acc, f(values));
        if (acc == 0) break;
      }
      return acc;
    }
  }
  throw InternalInconsistency("unknown polynomial kind");
}

Residue PolynomialHandle::evaluate(const Assignment& a) const {
  Evaluator ev(*this, a.field);
  return ev(a.values);
}

namespace {

void check_assignment(const Graph& g, const Assignment& a) {
  if (a.values.size() != g.num_edges()) {
    throw InvalidInput("assignment has " + std::to_string(a.values.size()) + " values for " +
                       std::to_string(g.num_edges()) + " edges");
  }
  for (Residue r : a.values) {
    if (r >= a.field.prime()) throw InvalidInput("assignment value not reduced");
  }
}

}  // namespace

Residue eval_kirchhoff(const Graph& g, const Assignment& a, const Orientation& o) {
  check_assignment(g, a);
  return PolynomialHandle::kirchhoff(g, o).evaluate(a);
}

Residue eval_kirchhoff_by_trees(const Graph& g, const Assignment& a) {
  check_assignment(g, a);
  const PrimeField& f = a.field;
  Residue sum = 0;
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    Residue term = 1 % f.prime();
    t.complement().for_each([&](EdgeId e) { term = f.mul(term, a.values[e]); });
    sum = f.add(sum, term);
  });
  return sum;
}

Residue eval_dodgson(const Graph& g, std::span<const EdgeId> rows, std::span<const EdgeId> cols,
                     std::span<const EdgeId> zeroed, const Assignment& a, const Orientation& o) {
  check_assignment(g, a);
  return PolynomialHandle::dodgson(g, {rows.begin(), rows.end()}, {cols.begin(), cols.end()},
                                   {zeroed.begin(), zeroed.end()}, o)
      .evaluate(a);
}

Residue eval_forest(const Graph& g, const VertexPartition& parts, const Assignment& a) {
  check_assignment(g, a);
  return PolynomialHandle::spanning_forest(g, parts).evaluate(a);
}

PolynomialHandle denominator_D3(const Graph& g, EdgeId e1, EdgeId e2, EdgeId e3) {
  const EdgeId es[] = {e1, e2, e3};
  check_edges(g, es, "denominator");
  return PolynomialHandle::product({PolynomialHandle::dodgson(g, {e1, e3}, {e2, e3}, {}),
                                    PolynomialHandle::dodgson(g, {e1}, {e2}, {e3})});
}

std::optional<Vertex> first_3valent_vertex(const Graph& g) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) == 3) return x;
  }
  return std::nullopt;
}

ThreeValentReduction reduce_at_3valent(const Graph& g, Vertex u) {
  if (u >= g.num_vertices()) throw InvalidInput("vertex out of range");
  const auto nb = g.neighbours(u);
  if (nb.empty()) throw InvalidInput("vertex " + std::to_string(u) + " is isolated");
  return reduce_at_3valent(g, u, nb.front());
}

ThreeValentReduction reduce_at_3valent(const Graph& g, Vertex u, Vertex u3) {
  if (u >= g.num_vertices()) throw InvalidInput("vertex out of range");
  if (g.degree(u) != 3) {
    throw InvalidInput("vertex " + std::to_string(u) + " is " + std::to_string(g.degree(u)) +
                       "-valent, not 3-valent");
  }
  const auto nb = g.neighbours(u);
  if (nb.size() != 3) {
    throw InvalidInput("vertex " + std::to_string(u) + " has a repeated neighbour or self-loop");
  }
  if (std::find(nb.begin(), nb.end(), u3) == nb.end()) {
    throw InvalidInput(std::to_string(u3) + " is not a neighbour of " + std::to_string(u));
  }
  ThreeValentReduction r;
  r.u = u;
  r.u3 = u3;
  std::vector<Vertex> rest;
  for (Vertex x : nb) {
    if (x != u3) rest.push_back(x);
  }
  r.u1 = rest[0];
  r.u2 = rest[1];
  for (const auto& inc : g.incident(u)) {
    if (inc.other == r.u1) r.e1 = inc.edge;
    if (inc.other == r.u2) r.e2 = inc.edge;
    if (inc.other == r.u3) r.e3 = inc.edge;
  }
  const Vertex removed[] = {u};
  r.deletion = delete_vertices(g, removed);
  const auto& map = r.deletion.old_to_new_vertex;
  r.partition = {{*map[r.u3]}, {*map[r.u1], *map[r.u2]}};
  return r;
}

}  // namespace c2lab
