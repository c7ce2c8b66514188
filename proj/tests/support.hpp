#pragma once

// Brute-force helpers shared by the test suites. None of these reuse library
// search code; they are the independent side of each comparison.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "girthforge/graph.hpp"

namespace support {

using girthforge::Edge;
using girthforge::Graph;
using girthforge::Vertex;

// Small random graph; each pair present with probability p.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

// Lengths of all simple cycles, by DFS from each cycle's smallest vertex.
inline std::set<std::size_t> cycle_lengths(const Graph& g) {
  const auto adj = adjacency_matrix(g);
  const std::size_t n = g.order();
  std::set<std::size_t> lengths;
  std::vector<bool> used(n, false);
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex start, Vertex at) -> void {
    for (Vertex w = start; w < n; ++w) {
      if (!adj[at][w]) continue;
      if (w == start && path.size() >= 3) lengths.insert(path.size());
      if (used[w] || w == start) continue;
      used[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = true;
    path.assign(1, s);
    dfs(dfs, s, s);
    used[s] = false;
  }
  return lengths;
}

inline std::size_t brute_girth(const Graph& g) {
  auto lengths = cycle_lengths(g);
  return lengths.empty() ? 0 : *lengths.begin();
}

inline bool has_even_cycle_up_to(const Graph& g, std::size_t bound) {
  for (auto len : cycle_lengths(g))
    if (len % 2 == 0 && len <= bound) return true;
  return false;
}

inline bool has_cycle_up_to(const Graph& g, std::size_t bound) {
  auto lengths = cycle_lengths(g);
  return !lengths.empty() && *lengths.begin() <= bound;
}

inline bool is_subgraph(const Graph& sub, const Graph& g) {
  if (sub.order() != g.order()) return false;
  for (const auto& e : sub.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

// Exhaustive ex(g, F) over every edge subset; m must be small.
template <typename Forbidden>
std::size_t brute_ex(const Graph& g, Forbidden&& has_forbidden) {
  const std::size_t m = g.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto count = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (count <= best) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) edges.push_back(g.edge(static_cast<girthforge::EdgeId>(i)));
    if (!has_forbidden(Graph(g.order(), std::move(edges)))) best = count;
  }
  return best;
}

}  // namespace support
