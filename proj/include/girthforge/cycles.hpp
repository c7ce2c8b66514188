#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

// A cycle given as its cyclic vertex sequence.
struct CycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// Consecutive (cyclic) vertices adjacent, all distinct, length >= 3.
inline bool validate_witness(const Graph& g, const CycleWitness& w) {
  const auto& cyc = w.vertices;
  if (cyc.size() < 3) return false;
  std::vector<Vertex> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

/// Forbidden cycle family: either all even cycles C4..C_bound, or all cycles
/// C3..C_bound.
class ForbiddenFamily {
 public:
  enum class Kind { EvenCyclesUpTo, AllCyclesUpTo };

  static ForbiddenFamily even_up_to(std::size_t bound) {
    if (bound < 4 || bound % 2 != 0)
      throw std::invalid_argument("even cycle bound must be even and >= 4, got " + std::to_string(bound));
    return ForbiddenFamily(Kind::EvenCyclesUpTo, bound);
  }
  static ForbiddenFamily all_up_to(std::size_t bound) {
    if (bound < 3) throw std::invalid_argument("cycle bound must be >= 3, got " + std::to_string(bound));
    return ForbiddenFamily(Kind::AllCyclesUpTo, bound);
  }

  // "even:4" or "all:5".
  static ForbiddenFamily parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family must look like even:2r or all:L");
    const std::string kind = text.substr(0, colon);
    std::size_t bound = 0;
    try {
      std::size_t used = 0;
      bound = std::stoul(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family bound in '" + text + "'");
    }
    if (kind == "even") return even_up_to(bound);
    if (kind == "all") return all_up_to(bound);
    throw std::invalid_argument("unknown family kind '" + kind + "'");
  }

  Kind kind() const { return kind_; }
  std::size_t bound() const { return bound_; }

  bool forbids(std::size_t cycle_length) const {
    if (cycle_length < 3 || cycle_length > bound_) return false;
    return kind_ == Kind::AllCyclesUpTo || cycle_length % 2 == 0;
  }

  // Every graph free of *this is free of `other`.
  bool implies(const ForbiddenFamily& other) const {
    if (kind_ == Kind::AllCyclesUpTo) return bound_ >= other.bound_;
    return other.kind_ == Kind::EvenCyclesUpTo && bound_ >= other.bound_;
  }

  std::string to_string() const {
    return (kind_ == Kind::EvenCyclesUpTo ? "even:" : "all:") + std::to_string(bound_);
  }

  friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;

 private:
  ForbiddenFamily(Kind kind, std::size_t bound) : kind_(kind), bound_(bound) {}
  Kind kind_;
  std::size_t bound_;
};

namespace detail {

constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();

// Closing edge (u, w) found from `root`, reconstructed into a simple cycle by
// trimming the two tree branches at their lowest common ancestor.
inline CycleWitness trace_cycle(const std::vector<Vertex>& parent, const std::vector<std::uint32_t>& dist,
                                Vertex u, Vertex w) {
  std::vector<Vertex> left{u}, right{w};
  Vertex a = u, b = w;
  while (dist[a] > dist[b]) left.push_back(a = parent[a]);
  while (dist[b] > dist[a]) right.push_back(b = parent[b]);
  while (a != b) {
    left.push_back(a = parent[a]);
    right.push_back(b = parent[b]);
  }
  right.pop_back();  // common ancestor is already the tail of `left`
  CycleWitness cyc;
  cyc.vertices.assign(left.rbegin(), left.rend());
  cyc.vertices.insert(cyc.vertices.end(), right.begin(), right.end());
  return cyc;
}

}  // namespace detail

/// Shortest cycle of length <= limit, if any.
///
/// BFS from every root r restricted to vertices >= r, so each cycle is found
/// from its smallest vertex. A level is only scanned while it can still beat the
/// best cycle seen, and the level on which a root first closes a cycle is
/// finished before moving on (an edge into the next level can give 2d+2 before
/// a same-level edge gives 2d+1). With `first_found` the search returns the
/// first cycle within the limit instead of the shortest.
inline std::optional<CycleWitness> shortest_cycle(const Graph& g,
                                                  std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                                  bool first_found = false) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> dist(n, detail::unseen);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> frontier, next, touched;

  std::optional<CycleWitness> best;
  std::size_t best_len = limit == std::numeric_limits<std::size_t>::max() ? limit : limit + 1;

  for (Vertex root = 0; root < n && best_len > 3; ++root) {
    if (g.degree(root) < 2) continue;
    for (Vertex t : touched) dist[t] = detail::unseen;
    touched.clear();
    frontier.assign(1, root);
    dist[root] = 0;
    parent[root] = root;
    touched.push_back(root);

    for (std::uint32_t level = 0; !frontier.empty(); ++level) {
      if (2 * static_cast<std::size_t>(level) + 1 >= best_len) break;
      std::optional<std::pair<Vertex, Vertex>> closing;
      std::size_t closing_len = best_len;
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (w < root) continue;
          if (dist[w] == detail::unseen) {
            dist[w] = level + 1;
            parent[w] = u;
            touched.push_back(w);
            next.push_back(w);
          } else if (w != parent[u] && dist[w] >= dist[u]) {
            const std::size_t len = static_cast<std::size_t>(dist[u]) + dist[w] + 1;
            if (len < closing_len) {
              closing_len = len;
              closing = {u, w};
            }
          }
        }
      }
      if (closing) {
        auto cyc = detail::trace_cycle(parent, dist, closing->first, closing->second);
        if (cyc.length() < best_len) {
          best_len = cyc.length();
          best = std::move(cyc);
          if (first_found) return best;
        }
        break;
      }
      std::swap(frontier, next);
    }
  }
  return best;
}

/// Exact girth.
inline Girth girth(const Graph& g) {
  auto cyc = shortest_cycle(g);
  return cyc ? Girth::finite(cyc->length()) : Girth::infinite();
}

/// Some even cycle of length <= bound, if one exists.
///
/// A cycle of length 2k is two internally disjoint paths of length k between
/// its smallest vertex s and the antipodal vertex. For every s we enumerate
/// simple paths of length <= bound/2 over vertices > s and, per (endpoint,
/// length), look for two internally disjoint ones.
inline std::optional<CycleWitness> find_short_even_cycle(const Graph& g, std::size_t bound) {
  if (bound < 4 || bound % 2 != 0) throw std::invalid_argument("even cycle bound must be even and >= 4");
  const std::size_t half = bound / 2;
  const std::size_t n = g.order();

  std::vector<Vertex> path;                 // current DFS path, path[0] == root
  std::vector<bool> on_path(n, false);
  std::vector<Vertex> pool;                 // interiors of stored paths, (length-1) vertices each
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_end;  // (endpoint,len) -> offsets in pool
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  std::optional<CycleWitness> found;

  auto disjoint = [&](std::size_t offset, std::size_t len) {
    ++stamp;
    for (std::size_t i = 1; i < len; ++i) mark[path[i]] = stamp;
    for (std::size_t i = 0; i + 1 < len; ++i)
      if (mark[pool[offset + i]] == stamp) return false;
    return true;
  };

  auto record = [&](Vertex end, std::size_t len) {
    const std::uint64_t key = (static_cast<std::uint64_t>(end) << 8) | len;
    auto& stored = by_end[key];
    for (std::size_t offset : stored) {
      if (!disjoint(offset, len)) continue;
      CycleWitness cyc;
      cyc.vertices.assign(path.begin(), path.end());  // root .. end
      for (std::size_t i = len - 1; i >= 1; --i) cyc.vertices.push_back(pool[offset + i - 1]);
      found = std::move(cyc);
      return;
    }
    stored.push_back(pool.size());
    pool.insert(pool.end(), path.begin() + 1, path.end() - 1);
  };

  // Explicit-stack DFS: each frame remembers the next neighbor index to try.
  std::vector<std::size_t> cursor;
  for (Vertex root = 0; root < n && !found; ++root) {
    if (g.degree(root) < 2) continue;
    pool.clear();
    by_end.clear();
    path.assign(1, root);
    cursor.assign(1, 0);
    on_path[root] = true;
    while (!path.empty() && !found) {
      const Vertex u = path.back();
      auto nb = g.neighbors(u);
      std::size_t& i = cursor.back();
      if (path.size() - 1 == half || i == nb.size()) {
        on_path[u] = false;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const Vertex w = nb[i++];
      if (w <= root || on_path[w]) continue;
      path.push_back(w);
      cursor.push_back(0);
      on_path[w] = true;
      if (path.size() - 1 >= 2) record(w, path.size() - 1);
    }
    for (Vertex v : path) on_path[v] = false;
  }
  return found;
}

// Either the family is absent, or a witness cycle from it.
struct FamilyVerdict {
  std::optional<CycleWitness> witness;
  bool free() const { return !witness.has_value(); }
};

/// Independent certifier used on every extractor output.
inline FamilyVerdict check_family_free(const Graph& g, const ForbiddenFamily& family) {
  if (family.kind() == ForbiddenFamily::Kind::EvenCyclesUpTo)
    return {find_short_even_cycle(g, family.bound())};
  return {shortest_cycle(g, family.bound(), /*first_found=*/true)};
}

// Is there a u-v path with at most max_len edges in `g`? Bidirectional BFS.
// Works on Graph and DynamicGraph. `scratch` holds per-vertex stamps.
template <typename G>
class ShortPathProbe {
 public:
  explicit ShortPathProbe(std::size_t n) : side_(n, 0), dist_(n, 0) {}

  bool within(const G& g, Vertex u, Vertex v, std::size_t max_len) {
    if (u == v) return true;
    if (max_len == 0) return false;
    stamp_ += 2;
    const std::uint32_t from_u = stamp_ - 1, from_v = stamp_;
    side_[u] = from_u;
    dist_[u] = 0;
    side_[v] = from_v;
    dist_[v] = 0;
    fu_.assign(1, u);
    fv_.assign(1, v);
    std::size_t du = 0, dv = 0;
    while (du + dv < max_len && !fu_.empty() && !fv_.empty()) {
      const bool grow_u = fu_.size() <= fv_.size();
      auto& frontier = grow_u ? fu_ : fv_;
      const std::uint32_t mine = grow_u ? from_u : from_v;
      const std::uint32_t theirs = grow_u ? from_v : from_u;
      std::size_t& depth = grow_u ? du : dv;
      next_.clear();
      for (Vertex x : frontier) {
        for (Vertex y : g.neighbors(x)) {
          if (side_[y] == theirs) return true;  // meeting gives length depth + 1 + their depth <= max_len
          if (side_[y] == mine) continue;
          side_[y] = mine;
          dist_[y] = static_cast<std::uint32_t>(depth + 1);
          next_.push_back(y);
        }
      }
      ++depth;
      std::swap(frontier, next_);
    }
    return false;
  }

 private:
  std::vector<std::uint32_t> side_;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> fu_, fv_, next_;
  std::uint32_t stamp_{0};
};

/// Would adding edge u-v to `g` create a cycle from `family`?
///
/// New cycles through u-v are u-v paths plus the edge. For all-cycle families
/// any path of length <= bound-1 counts; for even families we need a simple
/// path of odd length <= bound-1, enumerated by DFS pruned with BFS distances to v.
template <typename G>
class CycleClosureProbe {
 public:
  explicit CycleClosureProbe(std::size_t n)
      : short_paths_(n), dist_to_v_(n, detail::unseen), on_path_(n, false) {}

  bool closes(const G& g, Vertex u, Vertex v, const ForbiddenFamily& family) {
    const std::size_t max_len = family.bound() - 1;
    if (family.kind() == ForbiddenFamily::Kind::AllCyclesUpTo) return short_paths_.within(g, u, v, max_len);

    // BFS distances from v, limited to max_len.
    for (Vertex t : touched_) dist_to_v_[t] = detail::unseen;
    touched_.clear();
    dist_to_v_[v] = 0;
    touched_.push_back(v);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const Vertex x = touched_[head];
      if (dist_to_v_[x] == max_len) continue;
      for (Vertex y : g.neighbors(x))
        if (dist_to_v_[y] == detail::unseen) {
          dist_to_v_[y] = dist_to_v_[x] + 1;
          touched_.push_back(y);
        }
    }
    if (dist_to_v_[u] == detail::unseen) return false;
    on_path_[u] = true;
    const bool hit = odd_path(g, u, v, 0, max_len);
    on_path_[u] = false;
    return hit;
  }

 private:
  bool odd_path(const G& g, Vertex x, Vertex v, std::size_t len, std::size_t max_len) {
    for (Vertex y : g.neighbors(x)) {
      if (on_path_[y]) continue;
      const std::size_t next_len = len + 1;
      if (y == v) {
        if (next_len % 2 == 1) return true;
        continue;
      }
      if (dist_to_v_[y] == detail::unseen || next_len + dist_to_v_[y] > max_len) continue;
      on_path_[y] = true;
      const bool hit = odd_path(g, y, v, next_len, max_len);
      on_path_[y] = false;
      if (hit) return true;
    }
    return false;
  }

  ShortPathProbe<G> short_paths_;
  std::vector<std::uint32_t> dist_to_v_;
  std::vector<bool> on_path_;
  std::vector<Vertex> touched_;
};

}  // namespace girthforge
