#pragma once

// Wall-clock scaling measurements for the two planar arrangers.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "linarr/hs.hpp"
#include "linarr/intervals.hpp"
#include "linarr/tree.hpp"

namespace linarr::bench {

enum class family { random, path };
enum class method { hs, intervals };

inline std::string to_string(family f) { return f == family::random ? "random" : "path"; }
inline std::string to_string(method m) { return m == method::hs ? "hs" : "intervals"; }

struct row {
  std::size_t n = 0;
  family input = family::random;
  method algorithm = method::hs;
  double mean_seconds = 0;
  /// mean_seconds / (mean of the previous size); 0 for the first size.
  double ratio = 0;
};

/**
 * Keeps freed memory in the process. Otherwise glibc hands buffers above its
 * mmap threshold back to the kernel after every solve and the next trial pays
 * for fresh page faults, a step that shows up around a few hundred thousand
 * vertices and has nothing to do with the arrangers. Process-wide.
 */
inline void keep_heap_resident() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 32 << 20);  // the largest value glibc accepts
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

/// Mean wall time of a planar solve, one untimed warm-up, fresh tree per trial.
inline double time_planar(std::size_t n, family f, method m, std::size_t trials, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  auto make = [&](std::size_t trial) { return f == family::path ? path_tree(n) : random_tree(n, seed + trial); };
  auto solve = [&](const free_tree& t) { return m == method::hs ? hs_planar(t) : arrange_optimal_planar(t); };

  volatile position sink = solve(make(trials)).positions()[0];
  double total = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const free_tree t = make(k);
    const auto start = clock::now();
    const arrangement arr = solve(t);
    total += std::chrono::duration<double>(clock::now() - start).count();
    sink = arr.positions()[0];
  }
  (void)sink;
  return total / static_cast<double>(trials);
}

/// sizes must be ascending; rows come out grouped by family and method.
inline std::vector<row> run(const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed) {
  keep_heap_resident();
  std::vector<row> rows;
  for (family f : {family::random, family::path}) {
    for (method m : {method::hs, method::intervals}) {
      double previous = 0;
      for (std::size_t n : sizes) {
        const double t = time_planar(n, f, m, trials, seed);
        rows.push_back({n, f, m, t, previous > 0 ? t / previous : 0.0});
        previous = t;
      }
    }
  }
  return rows;
}

inline void print(std::ostream& out, const std::vector<row>& rows) {
  out << "family\talgorithm\tn\tmean_ms\tratio\n";
  for (const auto& r : rows) {
    out << to_string(r.input) << '\t' << to_string(r.algorithm) << '\t' << r.n << '\t' << r.mean_seconds * 1e3
        << '\t';
    if (r.ratio > 0) {
      out << r.ratio;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

}  // namespace linarr::bench
