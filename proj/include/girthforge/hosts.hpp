#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthforge/cycles.hpp"
#include "girthforge/graph.hpp"
#include "girthforge/random.hpp"

namespace girthforge {

// Thrown when a construction fails its own certificate. Always a bug.
class CertificateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A graph together with a verified certificate: freeness from
/// `certified_family`, its exact girth and minimum degree. Bipartite hosts keep
/// part A as vertices [0, part_a) and part B as the rest.
struct HostGraph {
  Graph graph;
  std::optional<ForbiddenFamily> certified_family;  // empty: no cycle constraint
  Girth certified_girth = Girth::infinite();
  std::size_t min_degree{0};
  std::string label;
  std::optional<std::size_t> part_a;
  bool degraded{false};  // set by dense_subhost when the target degree was not reached

  std::size_t order() const { return graph.order(); }
  std::size_t size() const { return graph.size(); }
};

inline bool is_bipartition(const Graph& g, std::size_t part_a) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return (e.u < part_a) != (e.v < part_a); });
}

/// Checks the family, then fills girth and minimum degree. Throws
/// CertificateFailure if the graph contains a forbidden cycle.
inline HostGraph certify_host(Graph graph, std::optional<ForbiddenFamily> family, std::string label,
                              std::optional<std::size_t> part_a = std::nullopt) {
  if (family)
    if (auto verdict = check_family_free(graph, *family); !verdict.free())
      throw CertificateFailure(label + " contains a cycle of length " +
                               std::to_string(verdict.witness->length()) + " forbidden by " + family->to_string());
  if (part_a && !is_bipartition(graph, *part_a)) throw CertificateFailure(label + " is not bipartite as declared");
  HostGraph host{std::move(graph), family, Girth::infinite(), 0, std::move(label), part_a, false};
  host.certified_girth = girth(host.graph);
  host.min_degree = host.graph.min_degree();
  return host;
}

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Smallest prime q with q^2 + q + 1 >= size (trial division).
inline std::uint64_t prime_for_plane_size(std::uint64_t size) {
  for (std::uint64_t q = 2;; ++q)
    if (is_prime(q) && q * q + q + 1 >= size) return q;
}

namespace detail {

// Points of the projective plane over Z_q as normalized homogeneous triples:
// (1,a,b), then (0,1,b), then (0,0,1).
inline std::vector<std::array<std::uint64_t, 3>> projective_points(std::uint64_t q) {
  std::vector<std::array<std::uint64_t, 3>> pts;
  pts.reserve(q * q + q + 1);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (std::uint64_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  return pts;
}

// Index of the normalized form of a nonzero triple.
inline std::size_t projective_index(std::array<std::uint64_t, 3> x, std::uint64_t q) {
  auto inverse = [q](std::uint64_t a) {
    std::uint64_t result = 1, base = a % q, e = q - 2;
    while (e) {
      if (e & 1) result = result * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return result;
  };
  if (x[0] % q) {
    const auto inv = inverse(x[0]);
    return static_cast<std::size_t>((x[1] * inv % q) * q + x[2] * inv % q);
  }
  if (x[1] % q) return static_cast<std::size_t>(q * q + x[2] * inverse(x[1]) % q);
  return static_cast<std::size_t>(q * q + q);
}

// Normalized points orthogonal to `x`: the q+1 points of the line x^T y = 0.
inline std::vector<std::size_t> orthogonal_points(const std::array<std::uint64_t, 3>& x, std::uint64_t q) {
  // Two independent solutions span the line; enumerate their combinations.
  std::array<std::uint64_t, 3> s{}, t{};
  auto neg = [q](std::uint64_t a) { return (q - a % q) % q; };
  if (x[0] % q) {
    s = {neg(x[1]), x[0] % q, 0};
    t = {neg(x[2]), 0, x[0] % q};
  } else if (x[1] % q) {
    s = {1, 0, 0};
    t = {0, neg(x[2]), x[1] % q};
  } else {
    s = {1, 0, 0};
    t = {0, 1, 0};
  }
  std::vector<std::size_t> out;
  out.reserve(q + 1);
  out.push_back(projective_index(t, q));
  for (std::uint64_t c = 0; c < q; ++c)
    out.push_back(projective_index({(s[0] + c * t[0]) % q, (s[1] + c * t[1]) % q, (s[2] + c * t[2]) % q}, q));
  return out;
}

}  // namespace detail

/// Polarity graph of the projective plane over Z_q: one vertex per point,
/// x ~ y iff x.y = 0 (mod q) and x != y. C4-free; the q+1 absolute points
/// have degree q and the rest q+1.
inline HostGraph polarity_graph(std::uint64_t q) {
  if (!is_prime(q) || q > 101) throw std::invalid_argument("polarity_graph needs a prime q <= 101, got " + std::to_string(q));
  const auto pts = detail::projective_points(q);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j : detail::orthogonal_points(pts[i], q))
      if (i < j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  std::sort(edges.begin(), edges.end());
  return certify_host(Graph(pts.size(), std::move(edges)), ForbiddenFamily::even_up_to(4),
                      "polarity(q=" + std::to_string(q) + ")");
}

/// Point-line incidence graph of the projective plane over Z_q. Points are
/// vertices [0, N), lines [N, 2N) with N = q^2+q+1; (q+1)-regular, girth 6.
inline HostGraph incidence_graph_pg2(std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("incidence_graph_pg2 needs a prime q, got " + std::to_string(q));
  const auto lines = detail::projective_points(q);  // line with coefficient vector l
  const std::size_t n = lines.size();
  std::vector<Edge> edges;
  edges.reserve(n * (q + 1));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t l : detail::orthogonal_points(lines[p], q))
      edges.push_back({static_cast<Vertex>(p), static_cast<Vertex>(n + l)});
  return certify_host(Graph(2 * n, std::move(edges)), ForbiddenFamily::all_up_to(5),
                      "incidence_pg2(q=" + std::to_string(q) + ")", n);
}

/// Greedy host of girth >= min_girth: one pass over a seeded uniform
/// permutation of all vertex pairs, adding a pair when its endpoints are at
/// distance >= min_girth - 1. Pairs in different components are always added,
/// so the result is connected.
inline HostGraph greedy_high_girth(std::size_t n, std::size_t min_girth, std::uint64_t seed) {
  if (min_girth < 3) throw std::invalid_argument("greedy_high_girth needs min_girth >= 3");
  struct Pair {
    Vertex u, v;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  Rng rng(seed);
  shuffle(std::span<Pair>(pairs), rng);

  DynamicGraph dg(n);
  ShortPathProbe<DynamicGraph> probe(n);
  for (const auto& p : pairs)
    if (!probe.within(dg, p.u, p.v, min_girth - 2)) dg.add_edge(p.u, p.v);

  auto edges = dg.edges();
  std::sort(edges.begin(), edges.end());
  std::optional<ForbiddenFamily> family;
  if (min_girth > 3) family = ForbiddenFamily::all_up_to(min_girth - 1);
  return certify_host(Graph(n, std::move(edges)), family,
                      "greedy(n=" + std::to_string(n) + ",girth>=" + std::to_string(min_girth) +
                          ",seed=" + std::to_string(seed) + ")");
}

/// Bipartite double cover: (v,0) is v, (v,1) is n+v; each edge uv becomes
/// (u,0)(v,1) and (v,0)(u,1). Girth never drops, and the cover is bipartite.
inline Graph bipartite_double_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, n + e.v});
    edges.push_back({e.v, n + e.u});
  }
  std::sort(edges.begin(), edges.end());
  return Graph(2 * g.order(), std::move(edges));
}

/// Vertices of the q-core, in increasing order.
inline std::vector<Vertex> core_vertices(const Graph& g, std::size_t q) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < q) {
      removed[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] < q) {
        removed[w] = true;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) keep.push_back(v);
  return keep;
}

/// The q-core: maximal induced subgraph with minimum degree >= q, relabelled
/// in increasing vertex order. Possibly empty.
inline Graph prune_min_degree(const Graph& g, std::size_t q) {
  const auto keep = core_vertices(g, q);
  return induced_subgraph(g, keep);
}

/// Prunes `host` toward minimum degree q while keeping more than k vertices.
///
/// q defaults to e / (2 * order), the host's edge count standing in for the
/// extremal number, rounded up. Vertices are removed one at a time (lowest
/// index among those below q). If the order would drop to k or below, the last
/// subgraph with more than k vertices is returned with `degraded` set.
inline HostGraph dense_subhost(const HostGraph& host, std::size_t k, std::optional<std::size_t> q = std::nullopt) {
  const Graph& g = host.graph;
  const std::size_t n = g.order();
  const std::size_t threshold =
      q ? *q : (n == 0 ? 0 : (g.size() + 2 * n - 1) / (2 * n));

  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::set<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < threshold) low.insert(v);
  }
  std::size_t remaining = n;
  bool degraded = false;
  while (!low.empty()) {
    if (remaining - 1 <= k) {
      degraded = true;
      break;
    }
    const Vertex v = *low.begin();
    low.erase(low.begin());
    removed[v] = true;
    --remaining;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && deg[w]-- == threshold) low.insert(w);
  }
  if (remaining <= k) degraded = true;

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) keep.push_back(v);
  std::optional<std::size_t> part_a;
  if (host.part_a)
    part_a = static_cast<std::size_t>(
        std::count_if(keep.begin(), keep.end(), [&](Vertex v) { return v < *host.part_a; }));
  auto sub = certify_host(induced_subgraph(g, keep), host.certified_family,
                          "dense_subhost(" + host.label + ",k=" + std::to_string(k) +
                              ",q=" + std::to_string(threshold) + ")",
                          part_a);
  sub.degraded = degraded;
  return sub;
}

/// Keeps the k vertices of part A = [0, part_a) with the highest degrees (ties
/// to the lower index) plus all of part B. The result has the kept A vertices
/// first, in index order, so its own part A is [0, k).
inline Graph bipartite_trim(const Graph& g, std::size_t part_a, std::size_t k) {
  if (part_a > g.order()) throw std::invalid_argument("part A larger than the graph");
  if (k > part_a)
    throw std::invalid_argument("bipartite_trim: k=" + std::to_string(k) + " exceeds |A|=" + std::to_string(part_a));
  if (!is_bipartition(g, part_a)) throw std::invalid_argument("bipartite_trim: graph has an edge inside a part");
  std::vector<Vertex> a(part_a);
  std::iota(a.begin(), a.end(), Vertex{0});
  std::stable_sort(a.begin(), a.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  a.resize(k);
  std::sort(a.begin(), a.end());
  for (Vertex b = static_cast<Vertex>(part_a); b < g.order(); ++b) a.push_back(b);
  return induced_subgraph(g, a);
}

// Swap the roles of the parts: B becomes [0, |B|).
inline Graph swap_parts(const Graph& g, std::size_t part_a) {
  std::vector<Vertex> order;
  for (Vertex v = static_cast<Vertex>(part_a); v < g.order(); ++v) order.push_back(v);
  for (Vertex v = 0; v < part_a; ++v) order.push_back(v);
  return induced_subgraph(g, order);
}

/// Bipartite host with parts of exactly `a` and `b` vertices cut from a larger
/// bipartite host by keeping the highest-degree vertices on each side.
inline HostGraph trim_to_parts(const HostGraph& host, std::size_t a, std::size_t b) {
  if (!host.part_a) throw std::invalid_argument("trim_to_parts needs a bipartite host");
  const std::size_t pa = *host.part_a, pb = host.order() - pa;
  if (a > pa || b > pb) throw std::invalid_argument("host too small for requested parts");
  Graph g = bipartite_trim(host.graph, pa, a);
  g = swap_parts(g, a);
  g = bipartite_trim(g, pb, b);
  g = swap_parts(g, b);
  return certify_host(std::move(g), host.certified_family,
                      "trim(" + host.label + "," + std::to_string(a) + "x" + std::to_string(b) + ")", a);
}

/// Star K_{1,b} inside parts (a, b) with the center at A-vertex 0, or K_{a,1}
/// with the center at B-vertex 0 when a > b.
inline HostGraph star_host(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  if (b >= a) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({0, static_cast<Vertex>(a + j)});
  } else {
    for (std::size_t i = 0; i < a; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a)});
  }
  return certify_host(Graph(a + b, std::move(edges)), ForbiddenFamily::all_up_to(std::max<std::size_t>(3, a + b)),
                      "star(" + std::to_string(a) + "x" + std::to_string(b) + ")", a);
}

/// Process-wide memo for expensive deterministic constructions, keyed by label.
template <typename Build>
std::shared_ptr<const HostGraph> cached_host(const std::string& key, Build&& build) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const HostGraph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto host = std::make_shared<const HostGraph>(build());
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(host)).first->second;
}

/// Side-car metadata block for an exported host.
inline void write_host_metadata(std::ostream& out, const HostGraph& host) {
  out << "label: " << host.label << '\n'
      << "vertices: " << host.order() << '\n'
      << "edges: " << host.size() << '\n'
      << "certified_family: " << (host.certified_family ? host.certified_family->to_string() : "none") << '\n'
      << "girth: " << host.certified_girth.to_string() << '\n'
      << "min_degree: " << host.min_degree << '\n';
  if (host.part_a) out << "part_a: " << *host.part_a << '\n';
  out << "degraded: " << (host.degraded ? "true" : "false") << '\n';
}

}  // namespace girthforge
