#pragma once

// Brute-force reference computations. Everything here scans S_n or closes
// generator sets naively, so it is only meant for n <= 8.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "wreath/colored.hpp"
#include "wreath/orbits.hpp"
#include "wreath/permutation.hpp"

namespace oracle {

using wreath::Color;
using wreath::Permutation;
using wreath::Point;

inline std::vector<Permutation> symmetric(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::set<Permutation> close(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = wreath::compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<Permutation> sorted(const std::set<Permutation>& s) {
  return {s.begin(), s.end()};
}

template <class Keep>
std::vector<Permutation> scan(std::size_t n, Keep keep) {
  std::vector<Permutation> out;
  for (const auto& p : symmetric(n))
    if (keep(p)) out.push_back(p);
  return out;
}

inline std::vector<Permutation> aut(const wreath::ColoredGraph& g) {
  const std::size_t n = g.size();
  return scan(n, [&](const Permutation& p) {
    for (Point v = 0; v < n; ++v)
      for (Point w = v + 1; w < n; ++w)
        if (g.color(p[v], p[w]) != g.color(v, w)) return false;
    return true;
  });
}

inline std::vector<Permutation> aut(const wreath::ColoredDigraph& g) {
  const std::size_t n = g.size();
  return scan(n, [&](const Permutation& p) {
    for (Point v = 0; v < n; ++v)
      for (Point w = 0; w < n; ++w)
        if (g.color(p[v], p[w]) != g.color(v, w)) return false;
    return true;
  });
}

inline std::vector<Permutation> aut(const wreath::ColoredHypergraph& h) {
  const std::size_t n = h.size();
  return scan(n, [&](const Permutation& p) {
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      std::uint32_t img = 0;
      for (Point x = 0; x < n; ++x)
        if (m >> x & 1u) img |= 1u << p[x];
      if (h.color(img) != h.color(m)) return false;
    }
    return true;
  });
}

/// Orbit of each ordered pair under an explicit element list; labels are
/// the least pair of each orbit (row-major index).
inline std::vector<std::size_t> orbital_labels(std::size_t n,
                                               const std::vector<Permutation>& elems) {
  std::vector<std::size_t> label(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    std::size_t best = i;
    for (const auto& g : elems) best = std::min<std::size_t>(best, g[i / n] * n + g[i % n]);
    label[i] = best;
  }
  return label;
}

/// Orbital graph built from an element list: edge color = least unordered
/// pair {x<y} in the edge's orbit, encoded x*n+y.
inline wreath::ColoredGraph orbital_graph(std::size_t n, const std::vector<Permutation>& elems) {
  return wreath::ColoredGraph::from_function(n, [&](Point v, Point w) {
    std::size_t best = SIZE_MAX;
    for (const auto& g : elems) {
      Point a = g[v], b = g[w];
      if (a > b) std::swap(a, b);
      best = std::min<std::size_t>(best, a * n + b);
    }
    return static_cast<Color>(best);
  });
}

inline wreath::ColoredDigraph orbital_digraph(std::size_t n, const std::vector<Permutation>& elems) {
  const auto label = orbital_labels(n, elems);
  std::vector<Color> arcs(n * n), vertex(n);
  for (std::size_t i = 0; i < n * n; ++i) arcs[i] = static_cast<Color>(label[i]);
  for (Point v = 0; v < n; ++v) vertex[v] = static_cast<Color>(label[v * n + v]);
  return wreath::ColoredDigraph(n, arcs, vertex);
}

inline wreath::ColoredHypergraph orbit_hypergraph(std::size_t n,
                                                  const std::vector<Permutation>& elems) {
  std::vector<Color> colors(std::size_t{1} << n, 0);
  for (std::uint32_t m = 1; m < colors.size(); ++m) {
    std::uint32_t best = m;
    for (const auto& g : elems) {
      std::uint32_t img = 0;
      for (Point x = 0; x < n; ++x)
        if (m >> x & 1u) img |= 1u << g[x];
      best = std::min(best, img);
    }
    colors[m] = best;
  }
  return wreath::ColoredHypergraph(n, colors);
}

/// Every permutation alpha with orbital(x alpha, y alpha) = orbital(y, x)
/// for all x != y.
inline std::vector<Permutation> transposers(std::size_t n, const std::vector<Permutation>& elems) {
  const auto label = orbital_labels(n, elems);
  return scan(n, [&](const Permutation& a) {
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y)
        if (x != y && label[a[x] * n + a[y]] != label[y * n + x]) return false;
    return true;
  });
}

inline std::vector<Permutation> elements(const wreath::PermGroup& g) {
  return sorted(close(g.degree(), g.generators()));
}

}  // namespace oracle
