#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthforge/graph.hpp"
#include "girthforge/random.hpp"

namespace girthforge {

using Color = std::uint32_t;

// Total map from vertices to colors in [0, ell).
struct VertexColoring {
  std::vector<Color> colors;
  std::size_t ell{0};

  static VertexColoring uniform(std::size_t n, std::size_t ell, Rng& rng) {
    if (ell == 0) throw std::invalid_argument("coloring needs at least one color");
    VertexColoring chi{std::vector<Color>(n), ell};
    for (auto& c : chi.colors) c = static_cast<Color>(uniform_below(rng, ell));
    return chi;
  }

  Color operator[](Vertex v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }
};

inline void require_coloring_fits(const Graph& g, const VertexColoring& chi, const Graph& host) {
  if (chi.size() != g.order())
    throw std::invalid_argument("coloring covers " + std::to_string(chi.size()) + " vertices, graph has " +
                                std::to_string(g.order()));
  for (Vertex v = 0; v < chi.size(); ++v)
    if (chi[v] >= host.order())
      throw std::out_of_range("color " + std::to_string(chi[v]) + " of vertex " + std::to_string(v) +
                              " is not a host vertex");
}

/// H': keep uv exactly when chi(u) chi(v) is a host edge.
inline Graph h_prime(const Graph& g, const VertexColoring& chi, const Graph& host) {
  require_coloring_fits(g, chi, host);
  return filter_edges(g, [&](EdgeId id) {
    const auto& e = g.edge(id);
    return host.has_edge(chi[e.u], chi[e.v]);
  });
}

namespace detail {

// Per-vertex sorted colors of the neighborhood, in CSR layout matching g.
struct NeighborColors {
  std::vector<std::size_t> offsets;
  std::vector<Color> colors;

  NeighborColors(const Graph& g, const VertexColoring& chi) : offsets(g.order() + 1, 0) {
    for (Vertex v = 0; v < g.order(); ++v) offsets[v + 1] = offsets[v] + g.degree(v);
    colors.resize(offsets.back());
    for (Vertex v = 0; v < g.order(); ++v) {
      auto out = colors.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
      for (Vertex w : g.neighbors(v)) *out++ = chi[w];
      std::sort(colors.begin() + static_cast<std::ptrdiff_t>(offsets[v]), out);
    }
  }

  std::size_t count(Vertex v, Color c) const {
    auto first = colors.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = colors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    auto [lo, hi] = std::equal_range(first, last, c);
    return static_cast<std::size_t>(hi - lo);
  }
};

}  // namespace detail

/// H*: the H' edges uv where v is the only neighbor of u colored chi(v) and u
/// the only neighbor of v colored chi(u). The coloring is then injective on
/// every neighborhood of the result.
inline Graph h_star(const Graph& g, const VertexColoring& chi, const Graph& host) {
  require_coloring_fits(g, chi, host);
  const detail::NeighborColors seen(g, chi);
  return filter_edges(g, [&](EdgeId id) {
    const auto& e = g.edge(id);
    return host.has_edge(chi[e.u], chi[e.v]) && seen.count(e.u, chi[e.v]) == 1 && seen.count(e.v, chi[e.u]) == 1;
  });
}

}  // namespace girthforge
