#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "girthforge/graph.hpp"
#include "girthforge/random.hpp"

namespace girthforge {

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(leaves + 1, std::move(edges));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

// Parts [0, a) and [a, a+b).
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
  return Graph(a + b, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % n)));
  return Graph(n, std::move(edges));
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

/// `cliques` disjoint copies of K_{clique_degree+1}, plus an apex (the last
/// vertex) joined to the first vertex of every copy. Minimum degree is
/// clique_degree; the apex has degree `cliques`.
inline Graph clique_apex(std::size_t clique_degree, std::size_t cliques) {
  if (clique_degree < 1 || cliques < 1) throw std::invalid_argument("clique_apex needs delta >= 1 and Delta >= 1");
  const std::size_t size = clique_degree + 1;
  const auto apex = static_cast<Vertex>(cliques * size);
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < cliques; ++c) {
    const auto base = static_cast<Vertex>(c * size);
    for (Vertex i = 0; i < size; ++i)
      for (Vertex j = i + 1; j < size; ++j) edges.push_back({base + i, base + j});
    edges.push_back({base, apex});
  }
  return Graph(cliques * size + 1, std::move(edges));
}

/// Uniform graph with exactly m edges (Floyd's subset sampling over pair ranks).
inline Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n ? n - 1 : 0) / 2;
  if (m > pairs)
    throw std::invalid_argument("random_gnm: m=" + std::to_string(m) + " exceeds C(n,2)=" + std::to_string(pairs));
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
  std::sort(ranks.begin(), ranks.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  // Rank r enumerates pairs (u, v), u < v, row by row.
  Vertex u = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t r : ranks) {
    while (r >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.push_back({u, static_cast<Vertex>(u + 1 + (r - row_start))});
  }
  return Graph(n, std::move(edges));
}

/// Textual generator spec: "star:N", "complete:N", "complete_bipartite:A:B",
/// "clique_apex:DELTA_MIN:DELTA_MAX", "random_gnm:N:M:SEED", "cycle:N", "path:N".
inline Graph generate(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty generator spec");
  std::vector<std::uint64_t> args;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    try {
      std::size_t used = 0;
      args.push_back(std::stoull(parts[i], &used));
      if (used != parts[i].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator argument '" + parts[i] + "' in '" + spec + "'");
    }
  }
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("generator '" + parts[0] + "' takes " + std::to_string(count) + " arguments");
  };
  const std::string& kind = parts[0];
  if (kind == "star") return need(1), star(args[0]);
  if (kind == "complete") return need(1), complete(args[0]);
  if (kind == "complete_bipartite") return need(2), complete_bipartite(args[0], args[1]);
  if (kind == "clique_apex") return need(2), clique_apex(args[0], args[1]);
  if (kind == "random_gnm") return need(3), random_gnm(args[0], args[1], args[2]);
  if (kind == "cycle") return need(1), cycle(args[0]);
  if (kind == "path") return need(1), path(args[0]);
  throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace girthforge
