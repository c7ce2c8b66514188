#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthforge/coloring.hpp"
#include "girthforge/cycles.hpp"
#include "girthforge/graph.hpp"
#include "girthforge/hosts.hpp"
#include "girthforge/partition.hpp"
#include "girthforge/random.hpp"
#include "girthforge/report.hpp"

namespace girthforge {

/// High/low degree split of a graph and the dyadic bucketing of the
/// high-degree side by degree into the low-degree side.
struct DegreeSplit {
  std::size_t m{0};
  std::vector<bool> in_v1;                 // d(v)^2 >= 4m
  std::vector<Vertex> v1, v2;
  std::vector<std::size_t> degree_into_v2;
  std::vector<std::vector<Vertex>> buckets;  // buckets[p]: degree into V2 in [2^p, 2^(p+1))
  std::optional<std::size_t> chosen;         // bucket with the most edges into V2
  std::size_t e12{0};                        // e(V1, V2)
  std::size_t e22{0};                        // e(V2)

  const std::vector<Vertex>& chosen_bucket() const { return buckets.at(chosen.value()); }
  std::size_t bucket_edges(std::size_t p) const {
    std::size_t total = 0;
    for (Vertex v : buckets[p]) total += degree_into_v2[v];
    return total;
  }
  // e(V1, V2) >= m/4
  bool high_degree_case() const { return 4 * e12 >= m; }
};

inline std::size_t floor_log2(std::size_t x) {
  std::size_t p = 0;
  while (x >>= 1) ++p;
  return p;
}

// Smallest integer L with L^2 >= x.
inline std::size_t ceil_sqrt(std::size_t x) {
  std::size_t r = 0;
  while (r * r < x) ++r;
  return r;
}

inline DegreeSplit split_and_bucket(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("split_and_bucket needs at least one edge");
  DegreeSplit s;
  s.m = g.size();
  const std::size_t n = g.order();
  s.in_v1.assign(n, false);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    s.in_v1[v] = d * d >= 4 * s.m;
    (s.in_v1[v] ? s.v1 : s.v2).push_back(v);
  }
  s.degree_into_v2.assign(n, 0);
  for (const auto& e : g.edges()) {
    if (s.in_v1[e.u] != s.in_v1[e.v]) {
      ++s.e12;
      ++s.degree_into_v2[s.in_v1[e.u] ? e.u : e.v];
    } else if (!s.in_v1[e.u]) {
      ++s.e22;
    }
  }
  s.buckets.assign(floor_log2(s.m) + 1, {});
  for (Vertex v : s.v1)
    if (s.degree_into_v2[v] > 0) s.buckets[floor_log2(s.degree_into_v2[v])].push_back(v);
  std::size_t best = 0;
  for (std::size_t p = 0; p < s.buckets.size(); ++p) {
    const std::size_t edges = s.bucket_edges(p);
    if (edges > best) {
      best = edges;
      s.chosen = p;
    }
  }
  return s;
}

/// Host part sizes for the high-degree case: |U_q| and ceil(m / |U_q|).
inline std::pair<std::size_t, std::size_t> case1_part_sizes(const DegreeSplit& split) {
  const std::size_t k = split.chosen_bucket().size();
  return {k, (split.m + k - 1) / k};
}

namespace detail {

inline std::uint64_t host_seed(std::size_t order, std::size_t girth_bound) {
  return mix_seed(0x6769727468ULL, static_cast<std::uint64_t>(order) * 256 + girth_bound);
}

inline std::shared_ptr<const HostGraph> greedy_cached(std::size_t n, std::size_t min_girth) {
  const std::uint64_t seed = host_seed(n, min_girth);
  return cached_host("greedy:" + std::to_string(n) + ":" + std::to_string(min_girth) + ":" + std::to_string(seed),
                     [&] { return greedy_high_girth(n, min_girth, seed); });
}

// Bipartite double cover of a cached greedy host: bipartite with girth >=
// min_girth, parts [0, n) and [n, 2n).
inline std::shared_ptr<const HostGraph> cover_cached(std::size_t n, std::size_t min_girth) {
  auto base = greedy_cached(n, min_girth);
  return cached_host("cover:" + base->label, [&] {
    return certify_host(bipartite_double_cover(base->graph), ForbiddenFamily::all_up_to(min_girth),
                        "double_cover(" + base->label + ")", n);
  });
}

inline std::shared_ptr<const HostGraph> incidence_cached(std::uint64_t q) {
  return cached_host("incidence:" + std::to_string(q), [&] { return incidence_graph_pg2(q); });
}

inline std::shared_ptr<const HostGraph> polarity_cached(std::uint64_t q) {
  return cached_host("polarity:" + std::to_string(q), [&] { return polarity_graph(q); });
}

}  // namespace detail

/// Candidate bipartite hosts with parts (a, b) free of even cycles up to 2r;
/// returns the one with the most edges (first on ties).
///
/// Candidates: a star; for r = 2 the projective-plane incidence graph trimmed
/// to the part sizes; for r >= 3 the bipartite double cover of a greedy
/// girth >= 2r+1 graph, trimmed the same way. Greedy hosts use a seed fixed by
/// their size so they can be cached.
inline HostGraph case1_host(std::size_t a, std::size_t b, std::size_t r) {
  HostGraph best = star_host(a, b);
  if (a == 1 || b == 1) return best;  // every bipartite host is then a star
  const std::size_t side = std::max(a, b);
  std::optional<HostGraph> other;
  if (r == 2) {
    other = trim_to_parts(*detail::incidence_cached(prime_for_plane_size(side)), a, b);
  } else {
    const std::size_t n = std::max(side, 2 * r + 1);
    other = trim_to_parts(*detail::cover_cached(n, 2 * r + 1), a, b);
  }
  if (other->size() > best.size()) best = std::move(*other);
  return best;
}

struct Case1Output {
  Graph graph;
  std::vector<Color> colors;  // uncolored vertices hold no_color
  static constexpr Color no_color = 0xFFFFFFFFu;
};

/// High-degree case. U_q vertex i gets host color i (part A), every V2 vertex
/// a uniform color from part B. An edge (u_i, v), v in V2, survives when
/// chi(v) is adjacent to i in the host and v is the only G-neighbor of u_i
/// with that color. The output is certified free of even cycles up to 2r.
inline Case1Output case1_extract(const Graph& g, const DegreeSplit& split, const HostGraph& host, std::size_t r,
                                 std::uint64_t seed) {
  if (!split.chosen) throw std::invalid_argument("case1_extract: no high-degree bucket");
  const auto& bucket = split.chosen_bucket();
  const auto [a, b] = case1_part_sizes(split);
  if (!host.part_a || *host.part_a != a || host.order() - *host.part_a != b)
    throw std::invalid_argument("case1_extract: host parts must be " + std::to_string(a) + " and " +
                                std::to_string(b));
  const auto family = ForbiddenFamily::even_up_to(2 * r);
  if (!host.certified_family || !host.certified_family->implies(family))
    throw std::invalid_argument("case1_extract: host is not certified " + family.to_string() + "-free");

  Rng rng(seed);
  Case1Output out{Graph(g.order()), std::vector<Color>(g.order(), Case1Output::no_color)};
  auto& chi = out.colors;
  for (std::size_t i = 0; i < bucket.size(); ++i) chi[bucket[i]] = static_cast<Color>(i);
  for (Vertex v : split.v2) chi[v] = static_cast<Color>(a + uniform_below(rng, b));

  std::vector<Edge> kept;
  std::vector<Color> around;
  for (std::size_t i = 0; i < bucket.size(); ++i) {
    const Vertex u = bucket[i];
    around.clear();
    for (Vertex w : g.neighbors(u)) around.push_back(chi[w]);
    std::sort(around.begin(), around.end());
    for (Vertex v : g.neighbors(u)) {
      if (split.in_v1[v] || !host.graph.has_edge(static_cast<Vertex>(i), chi[v])) continue;
      auto [lo, hi] = std::equal_range(around.begin(), around.end(), chi[v]);
      if (hi - lo == 1) kept.push_back(make_edge(u, v));
    }
  }
  std::sort(kept.begin(), kept.end());
  out.graph = Graph(g.order(), std::move(kept));
  if (auto verdict = check_family_free(out.graph, family); !verdict.free())
    throw CertificateFailure("case1 output contains a forbidden cycle of length " +
                             std::to_string(verdict.witness->length()));
  return out;
}

/// Everything the low-degree case needs besides the random coloring: the
/// host on about 2 sqrt(m) vertices and its bipartite sub-host.
struct Case2Host {
  HostGraph host;
  HostGraph bipartite;
};

inline Case2Host case2_host(std::size_t m, std::size_t r, std::uint64_t seed) {
  const std::size_t target = std::max<std::size_t>(ceil_sqrt(4 * m), 2 * r + 1);
  std::vector<std::shared_ptr<const HostGraph>> candidates;
  if (r == 2) {
    const auto q = prime_for_plane_size(target);
    if (q <= 101) candidates.push_back(detail::polarity_cached(q));
  }
  candidates.push_back(detail::greedy_cached(target, 2 * r + 1));

  std::optional<Case2Host> best;
  for (const auto& h : candidates) {
    auto part = max_kpartite(h->graph, 3, seed);
    auto sub = certify_host(std::move(part.crossing), ForbiddenFamily::all_up_to(2 * r + 1),
                            "bipartite(" + h->label + ")");
    if (!best || sub.size() > best->bipartite.size()) best = Case2Host{*h, std::move(sub)};
  }
  return std::move(*best);
}

/// Low-degree case: H* of `g2` against the bipartite sub-host under a uniform
/// coloring. Certified free of all cycles up to 2r+1.
inline Graph case2_extract(const Graph& g2, const Case2Host& hosts, std::size_t r, std::uint64_t seed) {
  Rng rng(seed);
  const auto chi = VertexColoring::uniform(g2.order(), hosts.bipartite.order(), rng);
  Graph out = h_star(g2, chi, hosts.bipartite.graph);
  const auto family = ForbiddenFamily::all_up_to(2 * r + 1);
  if (auto verdict = check_family_free(out, family); !verdict.free())
    throw CertificateFailure("case2 output contains a cycle of length " + std::to_string(verdict.witness->length()));
  return out;
}

// Convenience form that builds the hosts from the edge budget m.
inline Graph case2_extract(const Graph& g2, std::size_t m, std::size_t r, std::uint64_t seed) {
  for (Vertex v = 0; v < g2.order(); ++v)
    if (g2.degree(v) * g2.degree(v) >= 4 * m)
      throw std::invalid_argument("case2_extract: vertex " + std::to_string(v) + " has degree >= 2 sqrt(m)");
  if (g2.empty()) return Graph(g2.order());
  return case2_extract(g2, case2_host(m, r, mix_seed(seed, 0xC2)), r, seed);
}

/// Star on the lowest-index maximum-degree vertex.
inline Graph star_fallback(const Graph& g) {
  if (g.empty()) return Graph(g.order());
  const Vertex c = g.max_degree_vertex();
  auto ids = g.incident_edges(c);
  std::vector<EdgeId> keep(ids.begin(), ids.end());
  std::sort(keep.begin(), keep.end());
  return edge_subgraph(g, keep);
}

/// Greedy maximal matching in edge-id order.
inline Graph matching_fallback(const Graph& g) {
  std::vector<bool> used(g.order(), false);
  return filter_edges(g, [&](EdgeId id) {
    const auto& e = g.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
    return true;
  });
}

/// BFS spanning forest, rooted first at the maximum-degree vertex and then at
/// the lowest unvisited vertex of every other component.
inline Graph spanning_forest(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<EdgeId> keep;
  std::vector<Vertex> queue;
  auto grow = [&](Vertex root) {
    if (seen[root]) return;
    seen[root] = true;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      auto nb = g.neighbors(u);
      auto ids = g.incident_edges(u);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (!seen[nb[i]]) {
          seen[nb[i]] = true;
          keep.push_back(ids[i]);
          queue.push_back(nb[i]);
        }
    }
  };
  if (n > 0) grow(g.max_degree_vertex());
  for (Vertex v = 0; v < n; ++v) grow(v);
  std::sort(keep.begin(), keep.end());
  return edge_subgraph(g, keep);
}

/// Extends `base` (a subgraph of g free of `family`) by scanning the other
/// edges of g in a seeded random order and adding each one that closes no
/// cycle from `family`. The result is a maximal family-free subgraph of g.
inline Graph saturate(const Graph& g, const Graph& base, const ForbiddenFamily& family, std::uint64_t seed) {
  DynamicGraph dg(g.order());
  std::vector<bool> present(g.size(), false);
  for (const auto& e : base.edges()) {
    dg.add_edge(e.u, e.v);
    present[*g.find_edge(e.u, e.v)] = true;
  }
  std::vector<EdgeId> order;
  for (EdgeId id = 0; id < g.size(); ++id)
    if (!present[id]) order.push_back(id);
  Rng rng(seed);
  shuffle(std::span<EdgeId>(order), rng);
  CycleClosureProbe<DynamicGraph> probe(g.order());
  for (EdgeId id : order) {
    const auto& e = g.edge(id);
    if (!probe.closes(dg, e.u, e.v, family)) dg.add_edge(e.u, e.v);
  }
  auto edges = dg.edges();
  std::sort(edges.begin(), edges.end());
  return Graph(g.order(), std::move(edges));
}

struct ExtractionResult {
  Graph graph;
  ExtractionReport report;
};

/// Subgraph of g with no even cycle of length <= 2r (with `odd_free`, no
/// cycle of length <= 2r+1) and as many edges as the methods below find.
///
/// Each trial runs the high-degree case when e(V1,V2) >= m/4 and the
/// low-degree case on G[V2] otherwise, each from its own derived seed. Star,
/// g itself (when it already qualifies), star, maximal matching, spanning
/// forest and a random greedy maximal family-free subgraph are scored
/// alongside. Every candidate is certified; the one with the most edges wins,
/// trials first and then the others in that order.
/// With `odd_free` the input is first reduced to its crossing subgraph under
/// max_kpartite(k=3), which is bipartite.
inline ExtractionResult extract_even_cycle_free(const Graph& g, std::size_t r, std::size_t trials,
                                                std::uint64_t seed, bool odd_free = false) {
  if (r < 2) throw std::invalid_argument("r must be >= 2, got " + std::to_string(r));
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Stopwatch clock;
  const auto even = ForbiddenFamily::even_up_to(2 * r);
  const auto family = odd_free ? ForbiddenFamily::all_up_to(2 * r + 1) : even;

  ExtractionResult result{Graph(g.order()), {}};
  auto& rep = result.report;
  rep.input_n = g.order();
  rep.input_m = g.size();
  rep.r = r;
  rep.trials = trials;
  rep.seed = seed;
  rep.family = family.to_string();

  const Graph work = odd_free ? max_kpartite(g, 3, mix_seed(seed, 0xB1)).crossing : g;
  if (odd_free) rep.stats["bipartite_edges"] = work.size();

  auto certify = [&](const Graph& h, const std::string& what) {
    if (auto verdict = check_family_free(h, family); !verdict.free())
      throw CertificateFailure(what + " output contains a forbidden cycle of length " +
                               std::to_string(verdict.witness->length()));
  };

  std::optional<Graph> best;
  std::string best_method = "empty";
  auto offer = [&](Graph h, const std::string& method) {
    certify(h, method);
    if (!best || h.size() > best->size()) {
      best = std::move(h);
      best_method = method;
    }
  };

  if (!work.empty()) {
    const auto split = split_and_bucket(work);
    const bool case1 = split.high_degree_case() && split.chosen.has_value();
    rep.stats["v1"] = split.v1.size();
    rep.stats["e12"] = split.e12;
    rep.stats["e22"] = split.e22;
    rep.stats["case"] = case1 ? 1 : 2;

    std::size_t trial_sum = 0, trial_best = 0;
    if (case1) {
      const auto [a, b] = case1_part_sizes(split);
      const HostGraph host = case1_host(a, b, r);
      rep.stats["bucket"] = *split.chosen;
      rep.stats["host"] = host.label;
      rep.stats["host_edges"] = host.size();
      for (std::size_t i = 0; i < trials; ++i) {
        auto out = case1_extract(work, split, host, r, mix_seed(seed, i));
        trial_sum += out.graph.size();
        trial_best = std::max(trial_best, out.graph.size());
        offer(std::move(out.graph), "case1");
      }
    } else {
      std::vector<bool> in_v2(split.in_v1.size());
      for (std::size_t v = 0; v < in_v2.size(); ++v) in_v2[v] = !split.in_v1[v];
      const Graph g2 = spanning_induced(work, in_v2);
      const auto hosts = case2_host(split.m, r, mix_seed(seed, 0xC2));
      rep.stats["host"] = hosts.host.label;
      rep.stats["host_edges"] = hosts.bipartite.size();
      for (std::size_t i = 0; i < trials; ++i) {
        auto out = case2_extract(g2, hosts, r, mix_seed(seed, i));
        trial_sum += out.size();
        trial_best = std::max(trial_best, out.size());
        offer(std::move(out), "case2");
      }
    }
    rep.stats["trial_best_edges"] = trial_best;
    rep.stats["trial_mean_edges"] = static_cast<double>(trial_sum) / static_cast<double>(trials);

    Graph forest = spanning_forest(work);
    Graph saturated = saturate(work, Graph(work.order()), family, mix_seed(seed, 0x5A));
    rep.stats["fallback_star_edges"] = work.max_degree();
    rep.stats["fallback_forest_edges"] = forest.size();
    rep.stats["fallback_saturated_edges"] = saturated.size();
    if (check_family_free(work, family).free()) offer(work, "identity");
    offer(star_fallback(work), "fallback:star");
    offer(matching_fallback(work), "fallback:matching");
    offer(std::move(forest), "fallback:forest");
    offer(std::move(saturated), "fallback:saturated");
  }

  result.graph = best ? std::move(*best) : Graph(g.order());
  rep.method = best_method;
  rep.describe_output(result.graph);
  rep.certified = true;
  rep.timing_ms = clock.elapsed_ms();
  return result;
}

}  // namespace girthforge
