#pragma once

/**
 * @file io.hpp
 * @brief Text formats for trees and arrangements.
 *
 * Edge list: first line n, then n-1 lines "u v".
 * Head vector: one line of n integers, entry i the parent of vertex i, 0 for the root.
 * Arrangement: n lines "vertex position" (tab or space separated).
 * Blank lines and '#' comments are ignored everywhere.
 */

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "linarr/tree.hpp"

namespace linarr::io {

class parse_error : public tree_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : tree_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class tree_format { edges, heads };

namespace detail {

struct numbered_line {
  std::size_t number;
  std::vector<std::uint64_t> values;
};

// Non-empty, non-comment lines split into unsigned integers.
inline std::vector<numbered_line> read_numbers(std::istream& in, bool skip_cost_line = false) {
  std::vector<numbered_line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (skip_cost_line && line.starts_with("D=")) continue;
    std::istringstream ss(line);
    std::vector<std::uint64_t> values;
    std::string token;
    while (ss >> token) {
      std::size_t used = 0;
      std::uint64_t value = 0;
      try {
        if (token.front() == '-' || token.front() == '+') throw std::invalid_argument(token);
        value = std::stoull(token, &used);
      } catch (const std::exception&) {
        throw parse_error(number, "expected a non-negative integer, got '" + token + "'");
      }
      if (used != token.size()) throw parse_error(number, "expected an integer, got '" + token + "'");
      if (value > std::numeric_limits<vertex>::max()) throw parse_error(number, "value " + token + " too large");
      values.push_back(value);
    }
    if (!values.empty()) out.push_back({number, std::move(values)});
  }
  return out;
}

template <typename F>
auto with_line(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const parse_error&) {
    throw;
  } catch (const tree_error& e) {
    throw parse_error(line, e.what());
  }
}

}  // namespace detail

inline free_tree read_edge_list(std::istream& in) {
  const auto lines = detail::read_numbers(in);
  if (lines.empty()) throw parse_error(0, "empty input: expected the vertex count");
  if (lines[0].values.size() != 1) throw parse_error(lines[0].number, "first line must hold only n");
  const auto n = static_cast<std::size_t>(lines[0].values[0]);
  if (n == 0) throw parse_error(lines[0].number, "n must be positive");
  std::vector<edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.values.size() != 2) throw parse_error(l.number, "expected an edge 'u v'");
    edges.push_back({static_cast<vertex>(l.values[0]), static_cast<vertex>(l.values[1])});
  }
  if (edges.size() != n - 1) {
    const std::size_t where = lines.back().number;
    throw parse_error(where, "expected " + std::to_string(n - 1) + " edges for n=" + std::to_string(n) +
                                 ", found " + std::to_string(edges.size()));
  }
  return detail::with_line(lines.back().number, [&] { return free_tree(n, edges); });
}

inline rooted_tree read_head_vector(std::istream& in) {
  const auto lines = detail::read_numbers(in);
  if (lines.empty()) throw parse_error(0, "empty input: expected a head vector");
  if (lines.size() != 1) throw parse_error(lines[1].number, "head vector must be a single line");
  std::vector<vertex> heads(lines[0].values.begin(), lines[0].values.end());
  return detail::with_line(lines[0].number, [&] { return from_head_vector(heads); });
}

/// Either format; a head vector carries its own root.
using tree_input = std::variant<free_tree, rooted_tree>;

inline tree_input read_tree(std::istream& in, tree_format format) {
  if (format == tree_format::heads) return read_head_vector(in);
  return read_edge_list(in);
}

/// Also accepts the output of write_positions followed by a "D=<cost>" line.
inline arrangement read_arrangement(std::istream& in, std::size_t n) {
  const auto lines = detail::read_numbers(in, true);
  std::vector<position> pos(n, 0);
  for (const auto& l : lines) {
    if (l.values.size() != 2) throw parse_error(l.number, "expected 'vertex position'");
    const auto v = l.values[0];
    if (v < 1 || v > n) throw parse_error(l.number, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (pos[v - 1] != 0) throw parse_error(l.number, "vertex " + std::to_string(v) + " listed twice");
    pos[v - 1] = static_cast<position>(l.values[1]);
  }
  if (lines.size() != n) {
    throw parse_error(lines.empty() ? 0 : lines.back().number,
                      "expected " + std::to_string(n) + " vertices, found " + std::to_string(lines.size()));
  }
  return detail::with_line(lines.back().number, [&] { return arrangement(std::move(pos)); });
}

inline void write_edge_list(std::ostream& out, const free_tree& t) {
  out << t.size() << '\n';
  for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

inline void write_head_vector(std::ostream& out, const rooted_tree& t) {
  const auto heads = head_vector(t);
  for (std::size_t i = 0; i < heads.size(); ++i) out << (i ? " " : "") << heads[i];
  out << '\n';
}

/// "vertex<TAB>position" per vertex, in vertex order.
inline void write_positions(std::ostream& out, const arrangement& arr) {
  for (vertex v = 1; v <= arr.size(); ++v) out << v << '\t' << arr[v] << '\n';
}

}  // namespace linarr::io
