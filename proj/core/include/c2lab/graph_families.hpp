#pragma once

#include <initializer_list>

#include "c2lab/graph.hpp"

// Named graph families used by tests, benchmarks and the CLI's built-in
// identity suite. Edges are listed in lexicographic (u < v) order.
namespace c2lab::families {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph wheel(std::size_t rim);
Graph circulant(std::size_t n, std::initializer_list<std::size_t> jumps);
Graph octahedron();
Graph hypercube(std::size_t dim);
Graph prism(std::size_t n);

}  // namespace c2lab::families
