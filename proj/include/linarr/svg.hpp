#pragma once

// Arc diagrams: vertices on a horizontal baseline, edges as semicircles above it.

#include <algorithm>
#include <ostream>

#include "linarr/tree.hpp"

namespace linarr::svg {

struct style {
  double spacing = 40.0;
  double margin = 30.0;
  double dot_radius = 5.0;
};

/// root == no_vertex draws no root marker.
inline void render(std::ostream& out, const free_tree& t, const arrangement& arr, vertex root = no_vertex,
                   const style& st = {}) {
  const std::size_t n = t.size();
  std::uint64_t widest = 1;
  for (const auto& [u, v] : t.edges()) {
    widest = std::max<std::uint64_t>(widest, arr[u] > arr[v] ? arr[u] - arr[v] : arr[v] - arr[u]);
  }
  const double width = 2 * st.margin + st.spacing * static_cast<double>(n > 0 ? n - 1 : 0);
  const double baseline = st.margin + st.spacing * static_cast<double>(widest) / 2.0;
  const double height = baseline + st.margin;
  auto x_of = [&](vertex v) { return st.margin + st.spacing * static_cast<double>(arr[v] - 1); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& [u, v] : t.edges()) {
    const double x1 = std::min(x_of(u), x_of(v));
    const double x2 = std::max(x_of(u), x_of(v));
    const double r = (x2 - x1) / 2.0;
    out << "<path class=\"arc\" d=\"M " << x1 << ' ' << baseline << " A " << r << ' ' << r << " 0 0 1 " << x2
        << ' ' << baseline << "\"/>\n";
  }
  out << "</g>\n<g fill=\"black\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (vertex v = 1; v <= n; ++v) {
    const double x = x_of(v);
    out << "<circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"" << st.dot_radius << "\"/>\n";
    if (v == root) {
      out << "<circle class=\"root\" cx=\"" << x << "\" cy=\"" << baseline << "\" r=\"" << 2 * st.dot_radius
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    out << "<text x=\"" << x << "\" y=\"" << baseline + 3 * st.dot_radius + 6 << "\">" << v << "</text>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace linarr::svg
