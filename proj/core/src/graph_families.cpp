#include "c2lab/graph_families.hpp"

#include <algorithm>
#include <set>

namespace c2lab::families {

namespace {

Graph from_pairs(std::size_t n, std::set<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

void add(std::set<std::pair<Vertex, Vertex>>& pairs, std::size_t a, std::size_t b) {
  if (a == b) return;
  pairs.emplace(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b)));
}

}  // namespace

Graph path(std::size_t n) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) add(pairs, i, i + 1);
  return from_pairs(n, std::move(pairs));
}

Graph cycle(std::size_t n) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) add(pairs, i, (i + 1) % n);
  return from_pairs(n, std::move(pairs));
}

Graph complete(std::size_t n) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) add(pairs, i, j);
  }
  return from_pairs(n, std::move(pairs));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) add(pairs, i, m + j);
  }
  return from_pairs(m + n, std::move(pairs));
}

Graph wheel(std::size_t rim) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < rim; ++i) {
    add(pairs, i, (i + 1) % rim);
    add(pairs, i, rim);
  }
  return from_pairs(rim + 1, std::move(pairs));
}

Graph circulant(std::size_t n, std::initializer_list<std::size_t> jumps) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : jumps) add(pairs, i, (i + j) % n);
  }
  return from_pairs(n, std::move(pairs));
}

Graph octahedron() { return circulant(6, {1, 2}); }

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < dim; ++b) add(pairs, x, x ^ (std::size_t{1} << b));
  }
  return from_pairs(n, std::move(pairs));
}

Graph prism(std::size_t n) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    add(pairs, i, (i + 1) % n);
    add(pairs, n + i, n + (i + 1) % n);
    add(pairs, i, n + i);
  }
  return from_pairs(2 * n, std::move(pairs));
}

}  // namespace c2lab::families
