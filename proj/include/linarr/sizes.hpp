#pragma once

/**
 * @file sizes.hpp
 * @brief Directional subtree sizes and size-sorted adjacency lists.
 *
 * The directional size s(u,v) of an edge {u,v} is the number of vertices on
 * v's side of the edge. Sorting all sizes once with a counting sort and then
 * distributing them by source vertex yields, in O(n), neighbour lists ordered
 * non-increasingly by subtree size. Everything that arranges subtrees reads
 * its child order from these lists.
 */

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr {

struct size_triple {
  vertex from = no_vertex;
  vertex to = no_vertex;
  std::uint32_t size = 0;
  friend bool operator==(const size_triple&, const size_triple&) = default;
};

using size_triples = std::vector<size_triple>;

/**
 * s(u,v) for both orientations of every edge, 2(n-1) triples.
 *
 * Rooted at vertex 1 internally. Triples are grouped by `from` in label
 * order; within a group the children come in adjacency order and the
 * parent last, which is all the tie order of sort_by_size depends on.
 */
inline size_triples directional_sizes(const free_tree& t) {
  const std::size_t n = t.size();
  size_triples out;
  if (n < 2) return out;
  out.reserve(2 * (n - 1));

  // BFS from vertex 1, then sizes accumulate in reverse BFS order.
  std::vector<vertex> order;
  order.reserve(n);
  std::vector<vertex> parent(n + 1, no_vertex);
  order.push_back(1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const vertex u = order[i];
    for (vertex w : t.neighbors(u)) {
      if (w != parent[u]) {
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<std::uint32_t> size(n + 1, 1);
  for (std::size_t i = n; i-- > 1;) size[parent[order[i]]] += size[order[i]];

  // Row u lists its children in adjacency order and then its parent; the
  // stable sort only sees the order within a row.
  for (vertex u = 1; u <= n; ++u) {
    for (vertex w : t.neighbors(u)) {
      if (w != parent[u]) out.push_back({u, w, size[w]});
    }
    if (parent[u] != no_vertex) out.push_back({u, parent[u], static_cast<std::uint32_t>(n - size[u])});
  }
  return out;
}

/**
 * One triple (p(v), v, |subtree(v)|) per edge, oriented away from the root.
 * Post-order over children in construction order.
 */
inline size_triples subtree_sizes(const rooted_tree& t) {
  const std::size_t n = t.size();
  size_triples out;
  if (n < 2) return out;
  out.reserve(n - 1);

  struct frame {
    vertex v;
    std::uint32_t next;
    std::uint32_t size;
  };
  std::vector<frame> stack;
  for (vertex first : t.children(t.root())) {
    stack.push_back({first, 0, 1});
    while (!stack.empty()) {
      frame& f = stack.back();
      const auto kids = t.children(f.v);
      if (f.next < kids.size()) {
        stack.push_back({kids[f.next++], 0, 1});
        continue;
      }
      const frame done = f;
      stack.pop_back();
      out.push_back({t.parent(done.v), done.v, done.size});
      if (!stack.empty()) stack.back().size += done.size;
    }
  }
  return out;
}

enum class adjacency_form { free, rooted };

struct sized_neighbor {
  vertex v = no_vertex;
  std::uint32_t size = 0;
  friend bool operator==(const sized_neighbor&, const sized_neighbor&) = default;
};

/**
 * Per-vertex neighbour lists sorted non-increasingly by directional size.
 * The free form lists every neighbour; the rooted form lists children only.
 */
class sorted_adjacency_list {
 public:
  sorted_adjacency_list() = default;
  sorted_adjacency_list(std::size_t n, adjacency_form form, vertex root,
                        std::vector<std::uint32_t> offsets, std::vector<sized_neighbor> entries)
      : n_(n), form_(form), root_(root), offsets_(std::move(offsets)), entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return n_; }
  adjacency_form form() const noexcept { return form_; }
  /// Root of a rooted-form list; no_vertex for the free form.
  vertex root() const noexcept { return root_; }

  std::span<const sized_neighbor> operator[](vertex u) const {
    return {entries_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }

  /// Cache hint for a row that will be read soon.
  void prefetch(vertex u) const noexcept {
#if defined(__GNUC__)
    __builtin_prefetch(offsets_.data() + u);
#else
    (void)u;
#endif
  }

 private:
  std::size_t n_ = 0;
  adjacency_form form_ = adjacency_form::free;
  vertex root_ = no_vertex;
  std::vector<std::uint32_t> offsets_;
  std::vector<sized_neighbor> entries_;
};

/**
 * Counting sort of the triples by size, then distribution into per-vertex
 * lists by appending. O(n + |triples|).
 *
 * The sort is the classic stable ascending counting sort read back to front,
 * so equal sizes come out in reverse generation order. Any order among ties
 * is optimal; this one is fixed so outputs are reproducible.
 */
inline sorted_adjacency_list sort_by_size(std::span<const size_triple> triples, std::size_t n,
                                          adjacency_form form) {
  // bucket[s] = number of triples with size > s, i.e. the first slot of size s
  // in descending order.
  std::vector<std::uint32_t> bucket(n + 2, 0);
  for (const auto& t : triples) {
    assert(t.size >= 1 && t.size < n);
    ++bucket[t.size];
  }
  std::uint32_t running = 0;
  for (std::size_t s = n + 1; s-- > 0;) {
    const std::uint32_t c = bucket[s];
    bucket[s] = running;
    running += c;
  }
  std::vector<const size_triple*> sorted(triples.size());
  for (std::size_t i = triples.size(); i-- > 0;) sorted[bucket[triples[i].size]++] = &triples[i];

  std::vector<std::uint32_t> offsets(n + 2, 0);
  for (const auto& t : triples) ++offsets[t.from + 1];
  for (std::size_t u = 1; u < offsets.size(); ++u) offsets[u] += offsets[u - 1];
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<sized_neighbor> entries(triples.size());
  for (const size_triple* t : sorted) entries[cursor[t->from]++] = {t->to, t->size};

  vertex root = no_vertex;
  if (form == adjacency_form::rooted) {
    std::vector<bool> has_parent(n + 1, false);
    for (const auto& t : triples) has_parent[t.to] = true;
    for (vertex u = 1; u <= n && root == no_vertex; ++u) {
      if (!has_parent[u]) root = u;
    }
  }
  return {n, form, root, std::move(offsets), std::move(entries)};
}

inline sorted_adjacency_list sorted_free_adjacency(const free_tree& t) {
  const auto triples = directional_sizes(t);
  return sort_by_size(triples, t.size(), adjacency_form::free);
}

inline sorted_adjacency_list sorted_rooted_adjacency(const rooted_tree& t) {
  const auto triples = subtree_sizes(t);
  return sort_by_size(triples, t.size(), adjacency_form::rooted);
}

/**
 * Turns a free-form list into the rooted form at w by deleting, for every
 * vertex other than w, the entry that points to its parent. Surviving entries
 * keep their relative order.
 */
inline sorted_adjacency_list root_list(const sorted_adjacency_list& l, vertex w) {
  const std::size_t n = l.size();
  if (w < 1 || w > n) throw tree_error("root " + std::to_string(w) + " out of range");
  if (l.form() != adjacency_form::free) throw tree_error("root_list expects a free-form list");

  std::vector<sized_neighbor> entries;
  std::vector<std::uint32_t> offsets(n + 2, 0);
  entries.reserve(n > 0 ? n - 1 : 0);

  // Rooted at a centroid, every other vertex keeps at least n/2 vertices on
  // its parent's side and fewer on each child's side, so the parent heads
  // its row and the DFS can be skipped.
  const auto top = l[w];
  if (top.empty() || 2 * static_cast<std::uint64_t>(top.front().size) <= n) {
    for (vertex u = 1; u <= n; ++u) {
      const auto row = l[u];
      entries.insert(entries.end(), row.begin() + (u == w ? 0 : 1), row.end());
      offsets[u + 1] = static_cast<std::uint32_t>(entries.size());
    }
    return {n, adjacency_form::rooted, w, std::move(offsets), std::move(entries)};
  }

  std::vector<vertex> parent(n + 1, no_vertex);
  std::vector<vertex> stack{w};
  while (!stack.empty()) {
    const vertex u = stack.back();
    stack.pop_back();
    for (const auto& [v, s] : l[u]) {
      if (v != parent[u]) {
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }

  for (vertex u = 1; u <= n; ++u) {
    for (const auto& e : l[u]) {
      if (e.v != parent[u]) entries.push_back(e);
    }
    offsets[u + 1] = static_cast<std::uint32_t>(entries.size());
  }
  return {n, adjacency_form::rooted, w, std::move(offsets), std::move(entries)};
}

/**
 * A vertex whose largest hanging subtree has at most n/2 vertices. Starts at
 * vertex 1 and walks towards the heavy side, reading the heaviest neighbour
 * from the head of each sorted list.
 */
inline vertex find_centroidal_vertex(const free_tree& t, const sorted_adjacency_list& l) {
  const std::size_t n = t.size();
  vertex u = 1;
  while (true) {
    const auto row = l[u];
    if (!row.empty() && 2 * static_cast<std::uint64_t>(row.front().size) > n) {
      u = row.front().v;
    } else {
      return u;
    }
  }
}

inline vertex find_centroidal_vertex(const free_tree& t) {
  return find_centroidal_vertex(t, sorted_free_adjacency(t));
}

}  // namespace linarr
