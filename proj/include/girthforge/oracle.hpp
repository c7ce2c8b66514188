#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthforge/cycles.hpp"
#include "girthforge/graph.hpp"

namespace girthforge {

inline constexpr std::size_t exact_edge_cap = 30;

struct ExactResult {
  std::size_t value{0};
  std::vector<EdgeId> witness;  // edge ids of g, ascending
  std::uint64_t explored{0};    // search-tree nodes visited
};

/// ex(g, family): the largest family-free edge subset, by branch and bound.
///
/// Edges are decided in order of decreasing degree sum (ties by id). An edge is
/// only included when it closes no forbidden cycle with the edges already
/// taken; a branch is cut once taken + undecided cannot beat the incumbent.
inline ExactResult exact_ex(const Graph& g, const ForbiddenFamily& family) {
  if (g.size() > exact_edge_cap)
    throw std::invalid_argument("exact_ex is capped at " + std::to_string(exact_edge_cap) + " edges, got " +
                                std::to_string(g.size()));
  std::vector<EdgeId> order(g.size());
  for (EdgeId i = 0; i < order.size(); ++i) order[i] = i;
  auto degree_sum = [&](EdgeId id) { return g.degree(g.edge(id).u) + g.degree(g.edge(id).v); };
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return degree_sum(a) > degree_sum(b); });

  ExactResult best;
  DynamicGraph current(g.order());
  CycleClosureProbe<DynamicGraph> probe(g.order());
  std::vector<EdgeId> taken;

  auto search = [&](auto&& self, std::size_t depth) -> void {
    ++best.explored;
    // The empty set is feasible, so best starts as a valid answer.
    if (taken.size() + (order.size() - depth) <= best.value) return;
    if (depth == order.size()) {
      if (taken.size() > best.value) {
        best.value = taken.size();
        best.witness = taken;
      }
      return;
    }
    const EdgeId id = order[depth];
    const auto& e = g.edge(id);
    if (!probe.closes(current, e.u, e.v, family)) {
      current.add_edge(e.u, e.v);
      taken.push_back(id);
      self(self, depth + 1);
      taken.pop_back();
      current.pop_edge();
    }
    self(self, depth + 1);
  };
  search(search, 0);
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

/// Cherry count check for a bipartite graph with parts A = [0, part_a) and B.
///
/// `cherries` is the number of pairs of edges sharing an A-vertex. For a
/// C4-free graph every B-pair has at most one common A-neighbor, so cherries <=
/// C(|B|, 2). A violation reports a B-pair with two common A-neighbors.
struct CherryVerdict {
  std::uint64_t cherries{0};
  std::uint64_t bound{0};
  std::optional<CycleWitness> violation;  // a1 b1 a2 b2

  bool holds() const { return !violation.has_value(); }
};

inline CherryVerdict cherry_check(const Graph& h, std::size_t part_a) {
  if (part_a > h.order()) throw std::invalid_argument("part A larger than the graph");
  for (const auto& e : h.edges())
    if ((e.u < part_a) == (e.v < part_a))
      throw std::invalid_argument("cherry_check: edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                  " lies inside a part");
  const std::uint64_t nb = h.order() - part_a;
  CherryVerdict out;
  out.bound = nb * (nb ? nb - 1 : 0) / 2;

  // owner[(b1, b2)] = the A-vertex that first covered this B-pair.
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> owner(static_cast<std::size_t>(nb * nb), none);
  for (Vertex a = 0; a < part_a; ++a) {
    const std::uint64_t d = h.degree(a);
    out.cherries += d * (d ? d - 1 : 0) / 2;
    if (out.violation) continue;
    auto nbrs = h.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size() && !out.violation; ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const std::size_t b1 = nbrs[i] - part_a, b2 = nbrs[j] - part_a;
        Vertex& slot = owner[b1 * nb + b2];
        if (slot == none) {
          slot = a;
          continue;
        }
        out.violation = CycleWitness{{slot, nbrs[i], a, nbrs[j]}};
        break;
      }
  }
  return out;
}

}  // namespace girthforge
