#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthforge/graph.hpp"
#include "girthforge/random.hpp"

namespace girthforge {

// Assignment of every vertex to one of k-1 parts.
struct Partition {
  std::vector<std::uint32_t> parts;
  std::size_t k{3};

  std::size_t part_count() const { return k - 1; }
};

struct PartitionResult {
  Partition partition;
  Graph crossing;       // spanning subgraph of edges between different parts
  std::size_t moves{0};
};

/// Local-search (k-1)-partition in which every vertex keeps at least a
/// (k-2)/(k-1) fraction of its edges.
///
/// Starts from a seeded uniform assignment. Vertices are scanned in index
/// order; a vertex with more than d(v)/(k-1) neighbors in its own part moves to
/// the part holding the fewest of its neighbors (lowest index on ties) and the
/// scan restarts. Each move raises the cut by at least one, so there are at
/// most m moves.
inline PartitionResult max_kpartite(const Graph& g, std::size_t k, std::uint64_t seed) {
  if (k < 3) throw std::invalid_argument("max_kpartite needs k >= 3, got " + std::to_string(k));
  const std::size_t parts = k - 1;
  const std::size_t n = g.order();

  Rng rng(seed);
  PartitionResult result;
  auto& assign = result.partition.parts;
  result.partition.k = k;
  assign.resize(n);
  for (auto& p : assign) p = static_cast<std::uint32_t>(uniform_below(rng, parts));

  std::vector<std::size_t> count(parts);
  auto tally = [&](Vertex v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : g.neighbors(v)) ++count[assign[w]];
  };

  for (Vertex v = 0; v < n;) {
    tally(v);
    const std::size_t own = count[assign[v]];
    if (own * parts <= g.degree(v)) {
      ++v;
      continue;
    }
    std::size_t target = 0;
    for (std::size_t p = 1; p < parts; ++p)
      if (count[p] < count[target]) target = p;
    assign[v] = static_cast<std::uint32_t>(target);
    ++result.moves;
    v = 0;
  }

  result.crossing = filter_edges(g, [&](EdgeId id) {
    const auto& e = g.edge(id);
    return assign[e.u] != assign[e.v];
  });
  return result;
}

inline void write_partition(std::ostream& out, const Partition& p) {
  for (std::size_t v = 0; v < p.parts.size(); ++v) out << v << ' ' << p.parts[v] << '\n';
}

}  // namespace girthforge
