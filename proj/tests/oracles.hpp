#pragma once

// Brute-force reference implementations. They use only the raw edge list of
// a Graph, never the library's enumeration, elimination or counting code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "c2lab/graph.hpp"

namespace oracle {

using c2lab::Graph;
using c2lab::Vertex;

inline std::uint64_t mod(std::int64_t x, std::uint64_t p) {
  const auto r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Component label of each vertex in the spanning subgraph given by `chosen`.
inline std::vector<int> components(const Graph& g, const std::vector<bool>& chosen) {
  const std::size_t n = g.num_vertices();
  std::vector<int> label(n, -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!chosen[e]) continue;
        const auto& ed = g.edges()[e];
        Vertex y;
        if (ed.u == x) {
          y = ed.v;
        } else if (ed.v == x) {
          y = ed.u;
        } else {
          continue;
        }
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

inline int count_components(const std::vector<int>& label) {
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

// Spanning forest with k trees: n - k edges, exactly k components.
inline bool is_forest(const Graph& g, const std::vector<bool>& chosen, int k) {
  const auto edges = static_cast<std::size_t>(std::count(chosen.begin(), chosen.end(), true));
  if (edges + static_cast<std::size_t>(k) != g.num_vertices()) return false;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (chosen[e] && g.edges()[e].is_loop()) return false;
  }
  return count_components(components(g, chosen)) == k;
}

// Each part lies in its own component.
inline bool compatible(const Graph& g, const std::vector<bool>& chosen,
                       const std::vector<std::vector<Vertex>>& parts) {
  if (!is_forest(g, chosen, static_cast<int>(parts.size()))) return false;
  const auto label = components(g, chosen);
  std::vector<int> seen;
  for (const auto& part : parts) {
    for (Vertex x : part) {
      if (label[x] != label[part.front()]) return false;
    }
    seen.push_back(label[part.front()]);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Calls visit(mask) for every subset of edges of the given size.
inline void for_each_subset(std::size_t m, std::size_t size,
                            const std::function<void(const std::vector<bool>&)>& visit) {
  if (size > m) return;
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
  std::sort(mask.begin(), mask.end());
  do {
    visit(mask);
  } while (std::next_permutation(mask.begin(), mask.end()));
}

inline std::vector<std::vector<bool>> spanning_trees(const Graph& g) {
  std::vector<std::vector<bool>> out;
  if (g.num_vertices() == 0) return out;
  for_each_subset(g.num_edges(), g.num_vertices() - 1, [&](const std::vector<bool>& m) {
    if (is_forest(g, m, 1)) out.push_back(m);
  });
  return out;
}

inline std::vector<std::vector<bool>> forests(const Graph& g,
                                              const std::vector<std::vector<Vertex>>& parts) {
  std::vector<std::vector<bool>> out;
  if (g.num_vertices() < parts.size()) return out;
  for_each_subset(g.num_edges(), g.num_vertices() - parts.size(), [&](const std::vector<bool>& m) {
    if (compatible(g, m, parts)) out.push_back(m);
  });
  return out;
}

// Sum over sets S of prod_{e not in S} x_e, mod p.
inline std::uint64_t complement_sum(const std::vector<std::vector<bool>>& sets,
                                    const std::vector<std::uint64_t>& x, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& s : sets) {
    std::uint64_t term = 1;
    for (std::size_t e = 0; e < s.size(); ++e) {
      if (!s[e]) term = term * (x[e] % p) % p;
    }
    total = (total + term) % p;
  }
  return total;
}

// Number of points of F_p^vars where the complement sum vanishes.
inline std::uint64_t zero_count(const std::vector<std::vector<bool>>& sets, std::size_t vars,
                                std::uint64_t p) {
  std::vector<std::uint64_t> x(vars, 0);
  std::uint64_t zeros = 0;
  while (true) {
    if (complement_sum(sets, x, p) == 0) ++zeros;
    std::size_t i = 0;
    while (i < vars && ++x[i] == p) x[i++] = 0;
    if (i == vars) break;
  }
  return zeros;
}

inline std::uint64_t kirchhoff_zeros(const Graph& g, std::uint64_t p) {
  return zero_count(spanning_trees(g), g.num_edges(), p);
}

// Determinant over the integers by Laplace expansion along the first row.
inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(a[r][c]);
      }
      minor.push_back(std::move(row));
    }
    total += (j % 2 == 0 ? 1 : -1) * a[0][j] * det(minor);
  }
  return total;
}

// (psi, phi) with psi a spanning tree and phi a 2-forest compatible with parts.
inline std::uint64_t bipartitions(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  std::uint64_t n = 0;
  for (const auto& t : spanning_trees(g)) {
    std::vector<bool> rest(t.size());
    for (std::size_t e = 0; e < t.size(); ++e) rest[e] = !t[e];
    if (compatible(g, rest, parts)) ++n;
  }
  return n;
}

// Ordered tuples (psi_1..psi_k, phi_1..phi_k) using every edge exactly k times.
inline std::uint64_t partition_tuples(const Graph& g, std::size_t k,
                                      const std::vector<std::vector<std::vector<Vertex>>>& forest_parts) {
  const auto trees = spanning_trees(g);
  std::vector<std::vector<std::vector<bool>>> fs;
  for (const auto& parts : forest_parts) fs.push_back(forests(g, parts));
  std::vector<std::size_t> use(g.num_edges(), 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> pick = [&](std::size_t slot) {
    if (slot == 2 * k) {
      if (std::all_of(use.begin(), use.end(), [&](std::size_t u) { return u == k; })) ++count;
      return;
    }
    const auto& pool = slot < k ? trees : fs[slot - k];
    for (const auto& s : pool) {
      bool fits = true;
      for (std::size_t e = 0; e < s.size(); ++e) {
        if (s[e] && use[e] == k) fits = false;
      }
      if (!fits) continue;
      for (std::size_t e = 0; e < s.size(); ++e) use[e] += s[e] ? 1 : 0;
      pick(slot + 1);
      for (std::size_t e = 0; e < s.size(); ++e) use[e] -= s[e] ? 1 : 0;
    }
  };
  pick(0);
  return count;
}

}  // namespace oracle
