#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace girthforge {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u{0};
  Vertex v{0};

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Girth of a graph: a cycle length, or infinite for forests.
class Girth {
 public:
  static constexpr Girth infinite() { return Girth{}; }
  static constexpr Girth finite(std::size_t length) { return Girth{length}; }

  constexpr bool is_infinite() const { return !length_.has_value(); }
  constexpr bool is_finite() const { return length_.has_value(); }
  constexpr std::size_t length() const {
    if (!length_) throw std::logic_error("girth is infinite");
    return *length_;
  }

  // girth >= bound; infinite satisfies every bound.
  constexpr bool at_least(std::size_t bound) const { return !length_ || *length_ >= bound; }

  std::string to_string() const { return length_ ? std::to_string(*length_) : "inf"; }

  friend constexpr bool operator==(const Girth&, const Girth&) = default;
  friend constexpr bool operator<(const Girth& a, const Girth& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.length_ < *b.length_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Girth& g) { return os << g.to_string(); }

 private:
  constexpr Girth() = default;
  constexpr explicit Girth(std::size_t length) : length_(length) {}
  std::optional<std::size_t> length_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept in CSR form with each vertex's neighbors sorted, and a
/// parallel array maps every adjacency slot to the id of the edge it came from.
/// Edge ids are positions in the edge sequence handed to the constructor.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  explicit Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ > std::numeric_limits<Vertex>::max() || edges_.size() > std::numeric_limits<EdgeId>::max())
      throw std::invalid_argument("graph too large");
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u >= n_ || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
      e = make_edge(e.u, e.v);
    }
    build_adjacency();
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
  }
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  std::size_t min_degree() const {
    if (n_ == 0) return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }
  // Lowest-index vertex of maximum degree.
  Vertex max_degree_vertex() const {
    Vertex best = 0;
    for (Vertex v = 1; v < n_; ++v)
      if (degree(v) > degree(best)) best = v;
    return best;
  }

 private:
  void build_adjacency() {
    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];

    std::vector<std::pair<Vertex, EdgeId>> slots(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      slots[fill[e.u]++] = {e.v, id};
      slots[fill[e.v]++] = {e.u, id};
    }
    adjacency_.resize(slots.size());
    edge_ids_.resize(slots.size());
    for (std::size_t v = 0; v < n_; ++v) {
      auto first = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
      auto last = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
      std::sort(first, last);
      for (auto it = first; it != last; ++it) {
        auto slot = static_cast<std::size_t>(it - slots.begin());
        if (it != first && std::prev(it)->first == it->first)
          throw std::invalid_argument("parallel edge " + std::to_string(v) + " " + std::to_string(it->first));
        adjacency_[slot] = it->first;
        edge_ids_[slot] = it->second;
      }
    }
  }

  std::size_t n_{0};
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> edge_ids_;
};

// Spanning subgraph keeping the listed edge ids, in the order given.
inline Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep) {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  std::vector<bool> seen(g.size(), false);
  for (EdgeId id : keep) {
    if (id >= g.size()) throw std::out_of_range("unknown edge index " + std::to_string(id));
    if (seen[id]) continue;
    seen[id] = true;
    kept.push_back(g.edge(id));
  }
  return Graph(g.order(), std::move(kept));
}

// Spanning subgraph keeping edges whose id satisfies `keep`, in id order.
template <typename Pred>
Graph filter_edges(const Graph& g, Pred&& keep) {
  std::vector<Edge> kept;
  for (EdgeId id = 0; id < g.size(); ++id)
    if (keep(id)) kept.push_back(g.edge(id));
  return Graph(g.order(), std::move(kept));
}

// Induced subgraph on `vertices` (any order, no repeats), relabelled 0..k-1 in
// the given order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex absent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> label(g.order(), absent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw std::out_of_range("vertex out of range");
    if (label[vertices[i]] != absent) throw std::invalid_argument("repeated vertex in induced_subgraph");
    label[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (label[e.u] != absent && label[e.v] != absent) kept.push_back(make_edge(label[e.u], label[e.v]));
  return Graph(vertices.size(), std::move(kept));
}

// Spanning subgraph that drops every edge with an endpoint outside `vertices`.
inline Graph spanning_induced(const Graph& g, const std::vector<bool>& vertices) {
  return filter_edges(g, [&](EdgeId id) {
    const auto& e = g.edge(id);
    return vertices[e.u] && vertices[e.v];
  });
}

/// Growable adjacency lists for incremental constructions (greedy hosts,
/// saturation, exact search). Neighbor lists are unsorted.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n) : adj_(n) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(Vertex a, Vertex b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.push_back(make_edge(a, b));
  }
  // Undo the most recent add_edge.
  void pop_edge() {
    const Edge e = edges_.back();
    edges_.pop_back();
    adj_[e.u].pop_back();
    adj_[e.v].pop_back();
  }

  Graph freeze() const { return Graph(adj_.size(), edges_); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace girthforge
