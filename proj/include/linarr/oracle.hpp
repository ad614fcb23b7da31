#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive minimum-cost search over all n! arrangements, and the
 * search for trees whose projective optimum at some root exceeds their planar
 * optimum. Meant for small n; no pruning.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linarr/metrics.hpp"
#include "linarr/sizes.hpp"
#include "linarr/tree.hpp"

namespace linarr {

enum class regime { unrestricted, planar, projective };

inline constexpr std::size_t max_oracle_size = 9;
inline constexpr std::size_t max_separation_size = 7;

struct oracle_result {
  std::uint64_t min_cost = 0;
  arrangement witness;
  regime constraint = regime::unrestricted;
};

namespace detail {

inline void require_oracle_size(std::size_t n) {
  if (n > max_oracle_size) {
    throw tree_error("brute force supports n <= " + std::to_string(max_oracle_size) + ", got " +
                     std::to_string(n));
  }
}

// Calls visit(arr) for every arrangement, in lexicographic order of the
// left-to-right vertex sequence.
template <typename F>
void for_each_arrangement(std::size_t n, F&& visit) {
  std::vector<vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<vertex>(i + 1);
  do {
    visit(arrangement::from_order(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

inline oracle_result brute_force(const free_tree& t, regime r, vertex root) {
  require_oracle_size(t.size());
  std::optional<oracle_result> best;
  for_each_arrangement(t.size(), [&](const arrangement& arr) {
    if (r != regime::unrestricted && find_crossing_pairwise(t, arr)) return;
    if (r == regime::projective && find_covering_edge(t, arr, root)) return;
    const auto d = cost(t, arr);
    if (!best || d < best->min_cost) best = oracle_result{d, arr, r};
  });
  return *best;
}

}  // namespace detail

/// Minimum cost over all arrangements of t satisfying r (unrestricted or planar).
inline oracle_result brute_force_min(const free_tree& t, regime r) {
  if (r == regime::projective) throw tree_error("the projective regime needs a rooted tree");
  return detail::brute_force(t, r, no_vertex);
}

inline oracle_result brute_force_min(const rooted_tree& t, regime r) {
  return detail::brute_force(t.base(), r, t.root());
}

/// All three optima of one tree from a single sweep over the n! arrangements.
struct oracle_profile {
  std::uint64_t unrestricted = 0;
  std::uint64_t planar = 0;
  std::vector<std::uint64_t> projective;  ///< projective[r-1]: optimum rooted at r

  std::uint64_t projective_at(vertex r) const { return projective.at(r - 1); }
};

inline oracle_profile brute_force_profile(const free_tree& t) {
  const std::size_t n = t.size();
  detail::require_oracle_size(n);
  constexpr auto inf = std::numeric_limits<std::uint64_t>::max();
  oracle_profile out{inf, inf, std::vector<std::uint64_t>(n, inf)};
  detail::for_each_arrangement(n, [&](const arrangement& arr) {
    const auto d = cost(t, arr);
    out.unrestricted = std::min(out.unrestricted, d);
    if (find_crossing_pairwise(t, arr)) return;
    out.planar = std::min(out.planar, d);
    for (vertex r = 1; r <= n; ++r) {
      if (d < out.projective[r - 1] && !find_covering_edge(t, arr, r)) out.projective[r - 1] = d;
    }
  });
  return out;
}

/**
 * Canonical string of a rooted tree: "(" + sorted child encodings + ")".
 * Two rooted trees are isomorphic iff their encodings are equal.
 */
inline std::string rooted_canonical_form(const rooted_tree& t) {
  const std::size_t n = t.size();
  std::vector<vertex> order;
  order.reserve(n);
  std::vector<vertex> stack{t.root()};
  while (!stack.empty()) {
    const vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (vertex c : t.children(u)) stack.push_back(c);
  }
  std::vector<std::string> code(n + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> parts;
    for (vertex c : t.children(*it)) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ')';
    code[*it] = std::move(s);
  }
  return code[t.root()];
}

/// Canonical string of a free tree: the smallest rooted form over its centroid.
inline std::string free_canonical_form(const free_tree& t) {
  const auto l = sorted_free_adjacency(t);
  const vertex c = find_centroidal_vertex(t, l);
  std::string best = rooted_canonical_form(root_at(t, c));
  // A second centroid, if any, is the neighbour holding exactly half the tree.
  for (const auto& [v, s] : l[c]) {
    if (2 * static_cast<std::uint64_t>(s) == t.size()) {
      best = std::min(best, rooted_canonical_form(root_at(t, v)));
    }
  }
  return best;
}

/// A tree and a root whose projective optimum exceeds the tree's planar optimum.
struct separating_instance {
  free_tree tree;
  vertex root;
  std::uint64_t projective_min;
  std::uint64_t planar_min;
};

/**
 * Every (tree, root) on n vertices, up to rooted isomorphism, with projective
 * optimum strictly above the planar optimum. Ordered by canonical form.
 */
inline std::vector<separating_instance> find_separating_trees(std::size_t n) {
  if (n < 1 || n > max_separation_size) {
    throw tree_error("separating-tree search supports 1 <= n <= " + std::to_string(max_separation_size));
  }
  std::map<std::string, free_tree> classes;
  for_each_labeled_tree(n, [&](const free_tree& t) { classes.try_emplace(free_canonical_form(t), t); });

  std::map<std::string, separating_instance> found;
  for (const auto& [key, t] : classes) {
    const auto profile = brute_force_profile(t);
    for (vertex r = 1; r <= n; ++r) {
      if (profile.projective_at(r) > profile.planar) {
        found.try_emplace(rooted_canonical_form(root_at(t, r)),
                          separating_instance{t, r, profile.projective_at(r), profile.planar});
      }
    }
  }
  std::vector<separating_instance> out;
  for (auto& [key, inst] : found) out.push_back(std::move(inst));
  return out;
}

}  // namespace linarr
