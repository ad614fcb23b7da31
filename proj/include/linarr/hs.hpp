#pragma once

/**
 * @file hs.hpp
 * @brief Displacement-based optimal arrangements (Hochberg-Stallmann style,
 * with the corrected branch embedding).
 *
 * Every vertex gets an offset from the root's final position. A vertex v on
 * side dir of its parent is preceded, between parent and v, by its even-ranked
 * child subtrees (ranks 2, 4, ... in non-increasing size order); its odd-ranked
 * subtrees lie beyond it, the largest outermost.
 */

#include <cstdint>
#include <vector>

#include "linarr/sizes.hpp"
#include "linarr/tree.hpp"

namespace linarr {

/// relative[v] is v's offset from the root's position; relative[0] unused.
struct displacement_table {
  std::vector<std::int64_t> relative;

  explicit displacement_table(std::size_t n) : relative(n + 1, 0) {}
  std::int64_t& operator[](vertex v) { return relative[v]; }
  std::int64_t operator[](vertex v) const { return relative[v]; }
};

enum class direction : int { left = -1, right = 1 };

constexpr direction opposite(direction d) { return d == direction::left ? direction::right : direction::left; }
constexpr std::int64_t sign(direction d) { return static_cast<std::int64_t>(d); }

/**
 * Fills table for v and all of v's descendants.
 *
 * base is the offset of the slot boundary on the parent's side of v's block;
 * the block occupies base + dir*1 .. base + dir*|subtree(v)|.
 */
inline void embed_branch(const sorted_adjacency_list& l, vertex v, std::int64_t base, direction dir,
                         displacement_table& table) {
  struct task {
    vertex v;
    std::int64_t base;
    direction dir;
  };
  // FIFO, so rows are prefetched well before they are read.
  std::vector<task> queue{{v, base, dir}};
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const task t = queue[next];
    const auto children = l[t.v];
    const std::int64_t d = sign(t.dir);

    std::int64_t under_anchor = 0;
    for (std::size_t i = 1; i < children.size(); i += 2) under_anchor += children[i].size;
    const std::int64_t at = t.base + d * (under_anchor + 1);

    std::int64_t before = 0;
    std::int64_t after = 0;
    for (std::size_t i = children.size(); i-- > 0;) {
      const auto& [child, size] = children[i];
      if (i % 2 == 1) {  // rank i+1 even: between parent and v
        l.prefetch(child);
        queue.push_back({child, at - d * before, opposite(t.dir)});
        before += size;
      } else {
        l.prefetch(child);
        queue.push_back({child, at + d * after, t.dir});
        after += size;
      }
    }
    table[t.v] = at;
  }
}

/**
 * Lays out the root's children around it (odd ranks left, even ranks right,
 * smallest innermost) and translates the offsets into positions.
 */
inline arrangement hs_arrange(const sorted_adjacency_list& l, vertex root) {
  const std::size_t n = l.size();
  displacement_table table(n);
  const auto children = l[root];
  std::int64_t left_sum = 0;
  std::int64_t right_sum = 0;
  for (std::size_t i = children.size(); i-- > 0;) {
    const auto& [child, size] = children[i];
    if (i % 2 == 1) {
      embed_branch(l, child, right_sum, direction::right, table);
      right_sum += size;
    } else {
      embed_branch(l, child, -left_sum, direction::left, table);
      left_sum += size;
    }
  }
  table[root] = 0;
  const std::int64_t root_pos = left_sum + 1;
  std::vector<position> pos(n);
  for (vertex v = 1; v <= n; ++v) pos[v - 1] = static_cast<position>(root_pos + table[v]);
  return arrangement(std::move(pos));
}

/// Minimum-cost projective arrangement of a rooted tree.
inline arrangement hs_projective(const rooted_tree& t) {
  return hs_arrange(sorted_rooted_adjacency(t), t.root());
}

/// Minimum-cost planar arrangement: the projective optimum at a centroidal vertex.
inline arrangement hs_planar(const free_tree& t) {
  const auto l = sorted_free_adjacency(t);
  const vertex c = find_centroidal_vertex(t, l);
  return hs_arrange(root_list(l, c), c);
}

}  // namespace linarr
