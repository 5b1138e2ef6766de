#include "c2lab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "c2lab/error.hpp"

namespace c2lab {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)), incidence_(num_vertices) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw InvalidInput("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                         std::to_string(num_vertices_ == 0 ? 0 : num_vertices_ - 1));
    }
    const auto id = static_cast<EdgeId>(i);
    incidence_[e.u].push_back({id, e.v});
    incidence_[e.v].push_back({id, e.u});
  }
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& inc : incident(v)) {
    if (inc.other != v) out.push_back(inc.other);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& inc = incident(a);
  return std::any_of(inc.begin(), inc.end(), [b](const Incidence& i) { return i.other == b; });
}

bool Graph::is_connected() const {
  if (num_vertices_ == 0) return true;
  std::vector<char> seen(num_vertices_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& inc : incidence_[x]) {
      if (!seen[inc.other]) {
        seen[inc.other] = 1;
        ++reached;
        stack.push_back(inc.other);
      }
    }
  }
  return reached == num_vertices_;
}

bool Graph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : edges_) {
    if (e.is_loop()) return false;
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

bool Graph::is_regular(std::size_t k) const {
  return std::all_of(incidence_.begin(), incidence_.end(),
                     [k](const auto& inc) { return inc.size() == k; });
}

VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex r : removed) {
    if (r >= g.num_vertices()) {
      throw InvalidInput("vertex " + std::to_string(r) + " is not in the graph");
    }
    gone[r] = 1;
  }
  VertexDeletion out;
  out.old_to_new_vertex.assign(g.num_vertices(), std::nullopt);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!gone[x]) {
      out.old_to_new_vertex[x] = static_cast<Vertex>(out.new_to_old_vertex.size());
      out.new_to_old_vertex.push_back(x);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (gone[e.u] || gone[e.v]) continue;
    edges.push_back({*out.old_to_new_vertex[e.u], *out.old_to_new_vertex[e.v]});
    out.new_to_old_edge.push_back(id);
  }
  out.graph = Graph(out.new_to_old_vertex.size(), std::move(edges));
  return out;
}

VertexDeletion decomplete(const Graph& g, Vertex v) {
  const Vertex removed[] = {v};
  return delete_vertices(g, removed);
}

Graph delete_edge(const Graph& g, EdgeId e) {
  if (e >= g.num_edges()) throw InvalidInput("edge id out of range");
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (id != e) edges.push_back(g.edge(id));
  }
  return Graph(g.num_vertices(), std::move(edges));
}

Graph contract_edge(const Graph& g, EdgeId e) {
  if (e >= g.num_edges()) throw InvalidInput("edge id out of range");
  const Edge c = g.edge(e);
  if (c.is_loop()) throw InvalidInput("cannot contract a self-loop");
  const Vertex keep = std::min(c.u, c.v);
  const Vertex drop = std::max(c.u, c.v);
  auto relabel = [&](Vertex x) -> Vertex {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (id == e) continue;
    const Edge& old = g.edge(id);
    edges.push_back({relabel(old.u), relabel(old.v)});
  }
  return Graph(g.num_vertices() - 1, std::move(edges));
}

std::string_view to_string(PairCase c) {
  switch (c) {
    case PairCase::AllShared: return "all-shared";
    case PairCase::T: return "T";
    case PairCase::S: return "S";
    case PairCase::R: return "R";
  }
  return "?";
}

Vertex CaseLabel::label(char name) const {
  const auto idx = static_cast<std::size_t>(name - 'a');
  if (name < 'a' || idx >= marked.size()) {
    throw InvalidInput(std::string("no label '") + name + "' in a " +
                       std::string(to_string(kind)) + " classification");
  }
  return marked[idx];
}

Vertex PairGraph::marked_label(char name) const {
  const auto idx = static_cast<std::size_t>(name - 'a');
  if (name < 'a' || idx >= marked.size()) {
    throw InvalidInput(std::string("no label '") + name + "'");
  }
  return marked[idx];
}

CaseLabel classify_adjacent_pair(const Graph& g, Vertex v, Vertex w) {
  if (v >= g.num_vertices() || w >= g.num_vertices()) {
    throw InvalidInput("vertex out of range");
  }
  if (!g.is_simple() || !g.is_regular(4)) {
    throw InvalidInput("pair classification needs a simple 4-regular graph");
  }
  if (v == w || !g.adjacent(v, w)) {
    throw InvalidInput("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                       " are not adjacent");
  }
  std::vector<Vertex> nv;
  std::vector<Vertex> nw;
  for (Vertex x : g.neighbours(v)) {
    if (x != w) nv.push_back(x);
  }
  for (Vertex x : g.neighbours(w)) {
    if (x != v) nw.push_back(x);
  }
  std::vector<Vertex> shared;
  std::vector<Vertex> only_v;
  std::vector<Vertex> only_w;
  std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(), std::back_inserter(shared));
  std::set_difference(nv.begin(), nv.end(), shared.begin(), shared.end(),
                      std::back_inserter(only_v));
  std::set_difference(nw.begin(), nw.end(), shared.begin(), shared.end(),
                      std::back_inserter(only_w));

  CaseLabel out;
  out.v = v;
  out.w = w;
  auto append = [&out](const std::vector<Vertex>& xs) {
    out.marked.insert(out.marked.end(), xs.begin(), xs.end());
  };
  switch (shared.size()) {
    case 3:
      out.kind = PairCase::AllShared;
      append(shared);
      break;
    case 2:
      out.kind = PairCase::T;
      append(only_w);
      append(shared);
      append(only_v);
      break;
    case 1:
      out.kind = PairCase::S;
      append(only_w);
      append(shared);
      append(only_v);
      break;
    case 0:
      out.kind = PairCase::R;
      append(only_w);
      append(only_v);
      break;
    default:
      throw InternalInconsistency("adjacent pair shares more than three neighbours");
  }
  return out;
}

PairGraph split_adjacent_pair(const Graph& g, Vertex v, Vertex w) {
  PairGraph out;
  out.label = classify_adjacent_pair(g, v, w);
  const Vertex removed[] = {v, w};
  auto del = delete_vertices(g, removed);
  out.graph = std::move(del.graph);
  out.new_to_old_vertex = std::move(del.new_to_old_vertex);
  for (Vertex m : out.label.marked) out.marked.push_back(*del.old_to_new_vertex[m]);
  return out;
}

}  // namespace c2lab
