#pragma once

/**
 * @file tree.hpp
 * @brief Free and rooted trees with 1-based vertex labels, Pruefer coding,
 * random generation and exhaustive enumeration of labeled trees.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linarr {

/// Vertex label in [1, n]. Label 0 is never a valid vertex.
using vertex = std::uint32_t;
/// Position in a linear arrangement, in [1, n].
using position = std::uint32_t;

inline constexpr vertex no_vertex = 0;

/// Raised for malformed trees, arrangements and out-of-range arguments.
class tree_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct edge {
  vertex u = no_vertex;
  vertex v = no_vertex;
  friend bool operator==(const edge&, const edge&) = default;
};

namespace detail {

// Compressed adjacency: neighbours of u live in targets[offsets[u] .. offsets[u+1]).
// Index 0 is an unused slot so that labels index directly.
struct csr {
  std::vector<std::uint32_t> offsets;
  std::vector<vertex> targets;

  std::span<const vertex> row(vertex u) const {
    return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }
};

class disjoint_sets {
 public:
  explicit disjoint_sets(std::size_t n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), vertex{0});
  }
  vertex find(vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(vertex a, vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<vertex> parent_;
};

}  // namespace detail

/**
 * Undirected tree on vertices 1..n. Validated at construction and immutable
 * afterwards. Neighbour lists keep the order in which edges were given.
 */
class free_tree {
 public:
  free_tree(std::size_t n, std::span<const edge> edges) : n_(n), edges_(edges.begin(), edges.end()) {
    validate();
    build_adjacency();
  }
  free_tree(std::size_t n, std::initializer_list<edge> edges)
      : free_tree(n, std::span<const edge>(edges.begin(), edges.size())) {}

  std::size_t size() const noexcept { return n_; }
  const std::vector<edge>& edges() const noexcept { return edges_; }
  std::span<const vertex> neighbors(vertex u) const { return adj_.row(u); }
  std::size_t degree(vertex u) const { return neighbors(u).size(); }
  bool contains(vertex u) const noexcept { return u >= 1 && u <= n_; }

 private:
  void validate() const {
    if (n_ == 0) throw tree_error("tree must have at least one vertex");
    if (n_ > std::numeric_limits<vertex>::max() - 1) throw tree_error("tree too large");
    detail::disjoint_sets sets(n_);
    std::vector<std::pair<vertex, vertex>> seen;
    seen.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto [u, v] = edges_[i];
      if (u < 1 || u > n_ || v < 1 || v > n_) {
        throw tree_error("edge " + std::to_string(i + 1) + " {" + std::to_string(u) + "," +
                         std::to_string(v) + "} has a label outside 1.." + std::to_string(n_));
      }
      if (u == v) throw tree_error("self-loop at vertex " + std::to_string(u));
      seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
      throw tree_error("duplicate edge {" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + "}");
    }
    for (const auto& [u, v] : edges_) {
      if (!sets.unite(u, v)) {
        throw tree_error("cycle closed by edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
    }
    if (edges_.size() != n_ - 1) {
      throw tree_error("disconnected: a tree on " + std::to_string(n_) + " vertices needs " +
                       std::to_string(n_ - 1) + " edges, got " + std::to_string(edges_.size()));
    }
  }

  void build_adjacency() {
    adj_.offsets.assign(n_ + 2, 0);
    for (const auto& [u, v] : edges_) {
      ++adj_.offsets[u + 1];
      ++adj_.offsets[v + 1];
    }
    std::partial_sum(adj_.offsets.begin(), adj_.offsets.end(), adj_.offsets.begin());
    adj_.targets.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(adj_.offsets.begin(), adj_.offsets.end() - 1);
    for (const auto& [u, v] : edges_) {
      adj_.targets[cursor[u]++] = v;
      adj_.targets[cursor[v]++] = u;
    }
  }

  std::size_t n_;
  std::vector<edge> edges_;
  detail::csr adj_;
};

/**
 * A free tree with a designated root; edges are oriented away from it.
 * children(v) lists v's neighbours except its parent, in construction order.
 */
class rooted_tree {
 public:
  rooted_tree(free_tree base, vertex root) : base_(std::move(base)), root_(root) {
    if (!base_.contains(root_)) {
      throw tree_error("root " + std::to_string(root_) + " is not a vertex of a tree on " +
                       std::to_string(base_.size()) + " vertices");
    }
    orient();
  }

  const free_tree& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  vertex root() const noexcept { return root_; }
  /// Parent of v, or no_vertex for the root.
  vertex parent(vertex v) const { return parent_.at(v); }
  std::span<const vertex> children(vertex v) const { return children_.row(v); }

 private:
  void orient() {
    const std::size_t n = base_.size();
    parent_.assign(n + 1, no_vertex);
    std::vector<vertex> stack{root_};
    std::vector<bool> visited(n + 1, false);
    visited[root_] = true;
    while (!stack.empty()) {
      const vertex u = stack.back();
      stack.pop_back();
      for (vertex w : base_.neighbors(u)) {
        if (!visited[w]) {
          visited[w] = true;
          parent_[w] = u;
          stack.push_back(w);
        }
      }
    }
    children_.offsets.assign(n + 2, 0);
    for (vertex u = 1; u <= n; ++u) {
      children_.offsets[u + 1] = children_.offsets[u] +
                                 static_cast<std::uint32_t>(base_.degree(u) - (u == root_ ? 0 : 1));
    }
    children_.targets.reserve(n - 1);
    for (vertex u = 1; u <= n; ++u) {
      for (vertex w : base_.neighbors(u)) {
        if (w != parent_[u]) children_.targets.push_back(w);
      }
    }
  }

  free_tree base_;
  vertex root_;
  std::vector<vertex> parent_;
  detail::csr children_;
};

inline rooted_tree root_at(const free_tree& t, vertex r) { return rooted_tree(t, r); }

/**
 * Builds a rooted tree from a head vector: heads[i-1] is the parent of vertex
 * i and exactly one entry is 0, marking the root.
 */
inline rooted_tree from_head_vector(std::span<const vertex> heads) {
  const std::size_t n = heads.size();
  if (n == 0) throw tree_error("empty head vector");
  vertex root = no_vertex;
  std::vector<edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<vertex>(i + 1);
    if (heads[i] == 0) {
      if (root != no_vertex) {
        throw tree_error("head vector has two roots: " + std::to_string(root) + " and " +
                         std::to_string(v));
      }
      root = v;
    } else {
      edges.push_back({heads[i], v});
    }
  }
  if (root == no_vertex) throw tree_error("head vector has no root (no entry equal to 0)");
  return rooted_tree(free_tree(n, edges), root);
}

/// Head vector of a rooted tree (inverse of from_head_vector).
inline std::vector<vertex> head_vector(const rooted_tree& t) {
  std::vector<vertex> heads(t.size());
  for (vertex v = 1; v <= t.size(); ++v) heads[v - 1] = t.parent(v);
  return heads;
}

/**
 * A bijection from vertices 1..n to positions 1..n.
 */
class arrangement {
 public:
  arrangement() = default;

  /// positions[v-1] is the position of vertex v. Throws unless a bijection.
  explicit arrangement(std::vector<position> positions) : pos_(std::move(positions)) {
    std::vector<bool> used(pos_.size() + 1, false);
    for (std::size_t i = 0; i < pos_.size(); ++i) {
      const position p = pos_[i];
      if (p < 1 || p > pos_.size()) {
        throw tree_error("vertex " + std::to_string(i + 1) + " has position " + std::to_string(p) +
                         " outside 1.." + std::to_string(pos_.size()));
      }
      if (used[p]) throw tree_error("position " + std::to_string(p) + " is used twice");
      used[p] = true;
    }
  }

  /// Arrangement listing vertices from left to right.
  static arrangement from_order(std::span<const vertex> order) {
    std::vector<position> pos(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] < 1 || order[i] > order.size()) {
        throw tree_error("vertex " + std::to_string(order[i]) + " out of range");
      }
      pos[order[i] - 1] = static_cast<position>(i + 1);
    }
    return arrangement(std::move(pos));
  }

  static arrangement identity(std::size_t n) {
    std::vector<position> pos(n);
    std::iota(pos.begin(), pos.end(), position{1});
    return arrangement(std::move(pos));
  }

  std::size_t size() const noexcept { return pos_.size(); }
  position operator[](vertex v) const { return pos_[v - 1]; }
  std::span<const position> positions() const noexcept { return pos_; }

  /// order()[p-1] is the vertex at position p.
  std::vector<vertex> order() const {
    std::vector<vertex> inv(pos_.size());
    for (std::size_t i = 0; i < pos_.size(); ++i) inv[pos_[i] - 1] = static_cast<vertex>(i + 1);
    return inv;
  }

  /// Position p maps to n+1-p.
  arrangement mirrored() const {
    std::vector<position> pos(pos_);
    for (auto& p : pos) p = static_cast<position>(pos_.size() + 1 - p);
    return arrangement(std::move(pos));
  }

  friend bool operator==(const arrangement&, const arrangement&) = default;

 private:
  std::vector<position> pos_;
};

// Pruefer coding

/**
 * Decodes a Pruefer sequence of length n-2 over 1..n into a labeled tree.
 * Linear time. Edges come out in the order the leaves are removed.
 */
inline free_tree prufer_decode(std::size_t n, std::span<const vertex> seq) {
  if (n == 0) throw tree_error("tree must have at least one vertex");
  if (n == 1) {
    if (!seq.empty()) throw tree_error("Pruefer sequence for n=1 must be empty");
    return free_tree(1, std::span<const edge>{});
  }
  if (seq.size() != n - 2) {
    throw tree_error("Pruefer sequence for n=" + std::to_string(n) + " must have length " +
                     std::to_string(n - 2));
  }
  std::vector<std::uint32_t> degree(n + 1, 1);
  for (vertex x : seq) {
    if (x < 1 || x > n) throw tree_error("Pruefer label " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  std::vector<edge> edges;
  edges.reserve(n - 1);
  vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  vertex leaf = ptr;
  for (vertex x : seq) {
    edges.push_back({leaf, x});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, static_cast<vertex>(n)});
  return free_tree(n, edges);
}

/// Pruefer sequence of a labeled tree (length n-2, empty when n <= 2).
inline std::vector<vertex> prufer_encode(const free_tree& t) {
  const std::size_t n = t.size();
  if (n <= 2) return {};
  std::vector<vertex> parent(n + 1, no_vertex);
  {
    // orient towards n
    std::vector<vertex> stack{static_cast<vertex>(n)};
    std::vector<bool> seen(n + 1, false);
    seen[n] = true;
    while (!stack.empty()) {
      const vertex u = stack.back();
      stack.pop_back();
      for (vertex w : t.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = u;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::uint32_t> degree(n + 1);
  for (vertex u = 1; u <= n; ++u) degree[u] = static_cast<std::uint32_t>(t.degree(u));
  std::vector<vertex> seq;
  seq.reserve(n - 2);
  vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  vertex leaf = ptr;
  for (std::size_t i = 0; i < n - 2; ++i) {
    const vertex next = parent[leaf];
    seq.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

/// Uniformly random labeled tree on n vertices; deterministic for a fixed seed.
inline free_tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw tree_error("tree must have at least one vertex");
  std::vector<vertex> seq(n >= 2 ? n - 2 : 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<vertex> pick(1, static_cast<vertex>(n));
  for (auto& x : seq) x = pick(rng);
  return prufer_decode(n, seq);
}

/// Path 1-2-...-n.
inline free_tree path_tree(std::size_t n) {
  std::vector<edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (vertex v = 2; v <= n; ++v) edges.push_back({v - 1, v});
  return free_tree(n, edges);
}

/// Star with centre 1 and leaves 2..n.
inline free_tree star_tree(std::size_t n) {
  std::vector<edge> edges;
  for (vertex v = 2; v <= n; ++v) edges.push_back({1, v});
  return free_tree(n, edges);
}

inline constexpr std::size_t max_enumeration_size = 9;

/**
 * Streams every labeled tree on n vertices exactly once by decoding every
 * Pruefer sequence in lexicographic order.
 */
class labeled_tree_enumerator {
 public:
  explicit labeled_tree_enumerator(std::size_t n) : n_(n) {
    if (n < 1 || n > max_enumeration_size) {
      throw tree_error("labeled tree enumeration supports 1 <= n <= " +
                       std::to_string(max_enumeration_size) + ", got " + std::to_string(n));
    }
    if (n >= 2) seq_.assign(n - 2, 1);
  }

  std::optional<free_tree> next() {
    if (done_) return std::nullopt;
    free_tree t = prufer_decode(n_, seq_);
    advance();
    return t;
  }

  /// n^(n-2), or 1 for n <= 2.
  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i + 2 < n_; ++i) c *= n_;
    return c;
  }

 private:
  void advance() {
    for (std::size_t i = seq_.size(); i-- > 0;) {
      if (seq_[i] < n_) {
        ++seq_[i];
        return;
      }
      seq_[i] = 1;
    }
    done_ = true;
  }

  std::size_t n_;
  std::vector<vertex> seq_;
  bool done_ = false;
};

template <typename F>
void for_each_labeled_tree(std::size_t n, F&& visit) {
  labeled_tree_enumerator it(n);
  while (auto t = it.next()) visit(*t);
}

}  // namespace linarr
