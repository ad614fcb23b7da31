#pragma once

/**
 * @file intervals.hpp
 * @brief Interval-based optimal projective and planar arrangements.
 */

#include <cassert>
#include <vector>

#include "linarr/sizes.hpp"
#include "linarr/tree.hpp"

namespace linarr {

/// Closed range of positions [a, b] reserved for one subtree.
struct interval {
  position a = 1;
  position b = 1;
  std::size_t width() const noexcept { return b - a + 1; }
  friend bool operator==(const interval&, const interval&) = default;
};

enum class side { left, right };

constexpr side flip(side s) { return s == side::left ? side::right : side::left; }

/**
 * Places the subtree of u into span, writing positions into pos (indexed by
 * vertex - 1, 0 meaning unassigned).
 *
 * Children are taken largest first and sent to alternating ends of the
 * remaining interval, starting on u's own side relative to its parent, so
 * each child gets the outermost free block on its side and u ends up in the
 * single position left in the middle.
 */
inline void arrange(const sorted_adjacency_list& l, vertex u, side u_side, interval span,
                    std::vector<position>& pos) {
  struct task {
    vertex u;
    side s;
    interval span;
  };
  std::vector<task> queue{{u, u_side, span}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [v, s, iv] = queue[i];
    side next = s;
    for (const auto& [child, size] : l[v]) {
      assert(iv.width() > size);
      l.prefetch(child);
      if (next == side::left) {
        queue.push_back({child, side::left, {iv.a, iv.a + size - 1}});
        iv.a += size;
      } else {
        queue.push_back({child, side::right, {iv.b - size + 1, iv.b}});
        iv.b -= size;
      }
      next = flip(next);
    }
    assert(iv.a == iv.b);
    pos[v - 1] = iv.a;
  }
}

namespace detail {

inline arrangement arrange_from(const sorted_adjacency_list& l, vertex root) {
  const std::size_t n = l.size();
  std::vector<position> pos(n, 0);
  arrange(l, root, side::right, {1, static_cast<position>(n)}, pos);
  for ([[maybe_unused]] position p : pos) assert(p != 0);
  return arrangement(std::move(pos));
}

}  // namespace detail

/// Minimum-cost projective arrangement of a rooted tree.
inline arrangement arrange_optimal_projective(const rooted_tree& t) {
  return detail::arrange_from(sorted_rooted_adjacency(t), t.root());
}

/// Minimum-cost planar arrangement of a free tree.
inline arrangement arrange_optimal_planar(const free_tree& t) {
  const auto l = sorted_free_adjacency(t);
  const vertex c = find_centroidal_vertex(t, l);
  return detail::arrange_from(root_list(l, c), c);
}

}  // namespace linarr
