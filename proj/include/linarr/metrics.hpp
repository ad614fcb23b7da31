#pragma once

/**
 * @file metrics.hpp
 * @brief Cost of an arrangement, edge crossings, covered vertices, and the
 * planarity / projectivity predicates built on them.
 */

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

/// Two edges whose endpoint positions strictly interleave.
struct edge_crossing {
  edge first;
  edge second;
  friend bool operator==(const edge_crossing&, const edge_crossing&) = default;
};

namespace detail {

inline void require_same_size(const free_tree& t, const arrangement& arr) {
  if (arr.size() != t.size()) {
    throw tree_error("arrangement has " + std::to_string(arr.size()) + " positions but the tree has " +
                     std::to_string(t.size()) + " vertices");
  }
}

// Edge with endpoints ordered so that arr[u] < arr[v].
inline edge normalized(const edge& e, const arrangement& arr) {
  return arr[e.u] < arr[e.v] ? e : edge{e.v, e.u};
}

}  // namespace detail

/// Sum over edges of |arr(u) - arr(v)|.
inline std::uint64_t cost(const free_tree& t, const arrangement& arr) {
  detail::require_same_size(t, arr);
  std::uint64_t d = 0;
  for (const auto& [u, v] : t.edges()) {
    d += arr[u] < arr[v] ? arr[v] - arr[u] : arr[u] - arr[v];
  }
  return d;
}

inline std::uint64_t cost(const rooted_tree& t, const arrangement& arr) { return cost(t.base(), arr); }

inline bool crosses(const edge& a, const edge& b, const arrangement& arr) {
  const edge x = detail::normalized(a, arr);
  const edge y = detail::normalized(b, arr);
  const position s = arr[x.u], t = arr[x.v], u = arr[y.u], v = arr[y.v];
  return (s < u && u < t && t < v) || (u < s && s < v && v < t);
}

/**
 * Pairwise O(m^2) search for a crossing. Returns the first crossing pair in
 * edge-list order, or nothing if the arrangement is planar.
 */
inline std::optional<edge_crossing> find_crossing_pairwise(const free_tree& t, const arrangement& arr) {
  detail::require_same_size(t, arr);
  const auto& es = t.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (crosses(es[i], es[j], arr)) return edge_crossing{es[i], es[j]};
    }
  }
  return std::nullopt;
}

/**
 * Linear-time crossing search. Arcs are scanned by left endpoint with a stack
 * of open arcs; an arc that cannot be closed because a later-opened arc is
 * still open on top of it crosses that arc.
 */
inline std::optional<edge_crossing> find_crossing(const free_tree& t, const arrangement& arr) {
  detail::require_same_size(t, arr);
  const std::size_t n = t.size();
  if (n < 4) return std::nullopt;

  struct arc {
    position left;
    position right;
    edge e;
  };
  std::vector<arc> arcs;
  arcs.reserve(n - 1);
  for (const auto& e : t.edges()) {
    const edge ne = detail::normalized(e, arr);
    arcs.push_back({arr[ne.u], arr[ne.v], ne});
  }

  // Bucket by right endpoint descending, then stably by left endpoint, so arcs
  // opening at the same position come out longest first.
  std::vector<std::uint32_t> count(n + 2, 0);
  for (const auto& a : arcs) ++count[a.right];
  std::uint32_t run = 0;
  for (std::size_t p = n + 1; p-- > 0;) {
    const auto c = count[p];
    count[p] = run;
    run += c;
  }
  std::vector<arc> by_right(arcs.size());
  for (const auto& a : arcs) by_right[count[a.right]++] = a;

  std::vector<std::uint32_t> start(n + 2, 0);
  for (const auto& a : by_right) ++start[a.left + 1];
  for (std::size_t p = 1; p < start.size(); ++p) start[p] += start[p - 1];
  std::vector<std::uint32_t> cursor(start.begin(), start.end());
  std::vector<arc> by_left(arcs.size());
  for (const auto& a : by_right) by_left[cursor[a.left]++] = a;

  std::vector<std::uint32_t> closing(n + 2, 0);
  for (const auto& a : arcs) ++closing[a.right];

  std::vector<const arc*> open;
  for (position p = 1; p <= n; ++p) {
    while (!open.empty() && open.back()->right == p) {
      open.pop_back();
      --closing[p];
    }
    if (closing[p] != 0) {
      // Some arc ending at p is buried under the arc on top.
      for (auto it = open.rbegin(); it != open.rend(); ++it) {
        if ((*it)->right == p) return edge_crossing{(*it)->e, open.back()->e};
      }
    }
    for (std::uint32_t i = start[p]; i < start[p + 1]; ++i) open.push_back(&by_left[i]);
  }
  return std::nullopt;
}

inline bool is_planar(const free_tree& t, const arrangement& arr) { return !find_crossing(t, arr).has_value(); }

/// First edge (in edge-list order) that covers w: arr(u) < arr(w) < arr(v).
inline std::optional<edge> find_covering_edge(const free_tree& t, const arrangement& arr, vertex w) {
  detail::require_same_size(t, arr);
  if (!t.contains(w)) throw tree_error("vertex " + std::to_string(w) + " out of range");
  const position pw = arr[w];
  for (const auto& e : t.edges()) {
    const edge ne = detail::normalized(e, arr);
    if (arr[ne.u] < pw && pw < arr[ne.v]) return ne;
  }
  return std::nullopt;
}

/// Why an arrangement is not projective; both empty means it is.
struct projectivity_violation {
  std::optional<edge_crossing> crossing;
  std::optional<edge> root_cover;
  explicit operator bool() const noexcept { return crossing || root_cover; }
};

inline projectivity_violation check_projectivity(const rooted_tree& t, const arrangement& arr) {
  projectivity_violation out;
  out.crossing = find_crossing(t.base(), arr);
  if (!out.crossing) out.root_cover = find_covering_edge(t.base(), arr, t.root());
  return out;
}

/// Planar, and no edge covers the root.
inline bool is_projective(const rooted_tree& t, const arrangement& arr) {
  return !check_projectivity(t, arr);
}

}  // namespace linarr
