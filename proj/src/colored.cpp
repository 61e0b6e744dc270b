#include "wreath/colored.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "wreath/closures.hpp"
#include "wreath/errors.hpp"

namespace wreath {

namespace {

void check_vertices(std::size_t n) {
  if (n < 2) throw InvalidArgument("colored structures need at least 2 vertices");
}

// Injective check in both directions over parallel color sequences.
bool same_partition(const std::vector<Color>& a, const std::vector<Color>& b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<Color, Color> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, new1] = ab.try_emplace(a[i], b[i]);
    auto [it2, new2] = ba.try_emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i]) return false;
  }
  return true;
}

}  // namespace

ColoredGraph::ColoredGraph(std::size_t n, const std::vector<Color>& upper) {
  check_vertices(n);
  if (upper.size() != n * (n - 1) / 2)
    throw InvalidArgument("expected " + std::to_string(n * (n - 1) / 2) +
                          " edge colors, got " + std::to_string(upper.size()));
  pairs_ = {n, std::vector<Color>(n * n, 0)};
  std::size_t k = 0;
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j, ++k) pairs_.colors[i * n + j] = pairs_.colors[j * n + i] = upper[k];
}

ColoredGraph ColoredGraph::from_function(std::size_t n,
                                         const std::function<Color(Point, Point)>& color) {
  check_vertices(n);
  ColoredGraph g;
  g.pairs_ = {n, std::vector<Color>(n * n, 0)};
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j) g.pairs_.colors[i * n + j] = g.pairs_.colors[j * n + i] = color(i, j);
  return g;
}

ColoredGraph ColoredGraph::monochromatic(std::size_t n, Color c) {
  return from_function(n, [c](Point, Point) { return c; });
}

ColoredGraph ColoredGraph::rainbow(std::size_t n) {
  return from_function(n, [n](Point i, Point j) { return static_cast<Color>(i * n + j); });
}

std::vector<Color> ColoredGraph::upper() const {
  const std::size_t n = size();
  std::vector<Color> out;
  out.reserve(n * (n - 1) / 2);
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j) out.push_back(color(i, j));
  return out;
}

std::size_t ColoredGraph::color_count() const {
  auto u = upper();
  return std::set<Color>(u.begin(), u.end()).size();
}

ColoredGraph ColoredGraph::with_color(Point v, Point w, Color c) const {
  if (v == w || v >= size() || w >= size()) throw InvalidArgument("not an edge");
  ColoredGraph g = *this;
  g.pairs_.colors[v * size() + w] = g.pairs_.colors[w * size() + v] = c;
  return g;
}

ColoredDigraph::ColoredDigraph(std::size_t n, const std::vector<Color>& arcs,
                               std::vector<Color> vertex_colors) {
  check_vertices(n);
  if (arcs.size() != n * n)
    throw InvalidArgument("expected an " + std::to_string(n) + "x" + std::to_string(n) +
                          " arc matrix");
  if (vertex_colors.empty()) vertex_colors.assign(n, 0);
  if (vertex_colors.size() != n) throw InvalidArgument("one vertex color per vertex required");
  pairs_ = {n, arcs};
  for (Point v = 0; v < n; ++v) pairs_.colors[v * n + v] = vertex_colors[v];
}

std::vector<Color> ColoredDigraph::arcs() const {
  std::vector<Color> out = pairs_.colors;
  for (Point v = 0; v < size(); ++v) out[v * size() + v] = 0;
  return out;
}

std::vector<Color> ColoredDigraph::vertex_colors() const {
  std::vector<Color> out(size());
  for (Point v = 0; v < size(); ++v) out[v] = vertex_color(v);
  return out;
}

ColoredHypergraph::ColoredHypergraph(std::size_t n, std::vector<Color> colors)
    : n_(n), colors_(std::move(colors)) {
  check_vertices(n);
  if (n > 24) throw CapExceeded("hypergraphs are limited to 24 vertices");
  if (colors_.size() != (std::size_t{1} << n))
    throw InvalidArgument("expected 2^n subset colors");
  colors_[0] = 0;
}

ColoredGraph orbital_graph(const PermGroup& a) {
  const OrbitalData d = orbitals(a);
  return ColoredGraph::from_function(a.degree(), [&d](Point v, Point w) {
    return static_cast<Color>(d.star_orbital(v, w));
  });
}

ColoredDigraph orbital_digraph(const PermGroup& a) {
  const std::size_t n = a.degree();
  const OrbitalData d = orbitals(a);
  const OrbitPartition orb = orbits(a);
  std::vector<Color> arcs(n * n, 0), vertex(n);
  for (Point v = 0; v < n; ++v) {
    vertex[v] = static_cast<Color>(orb.class_of[v]);
    for (Point w = 0; w < n; ++w)
      if (v != w) arcs[v * n + w] = static_cast<Color>(d.orbital(v, w));
  }
  return ColoredDigraph(n, arcs, std::move(vertex));
}

ColoredHypergraph orbit_hypergraph(const PermGroup& b) {
  const SubsetOrbits so = subset_orbits(b);
  std::vector<Color> colors(so.label.size(), 0);
  for (std::size_t m = 1; m < so.label.size(); ++m) colors[m] = static_cast<Color>(so.label[m]);
  return ColoredHypergraph(b.degree(), std::move(colors));
}

ColoredGraph composition(const ColoredGraph& g, const ColoredGraph& h) {
  const std::size_t nw = g.size(), nv = h.size();
  return ColoredGraph::from_function(nw * nv, [&](Point a, Point b) {
    const Point w1 = a % nw, w2 = b % nw;
    if (w1 != w2) return g.color(w1, w2);
    return h.color(a / nw, b / nw);
  });
}

ColoredGraph free_composition(const ColoredGraph& g, const ColoredGraph& h,
                              const OrbitPartition& w_orbits, const OrbitPartition& v_orbits) {
  const std::size_t nw = g.size(), nv = h.size(), n = nw * nv;
  if (w_orbits.class_of.size() != nw || v_orbits.class_of.size() != nv)
    throw InvalidArgument("orbit partitions do not match the graph sizes");
  using Key = std::tuple<std::size_t, std::size_t, Color>;
  std::map<Key, Color> cross, vertical;
  // First pass numbers cross-fibre colors, second pass fibre colors.
  for (int pass = 0; pass < 2; ++pass)
    for (Point a = 0; a < n; ++a)
      for (Point b = a + 1; b < n; ++b) {
        const Point w1 = a % nw, w2 = b % nw, v1 = a / nw, v2 = b / nw;
        if (w1 != w2 && pass == 0) {
          const std::size_t i = v_orbits.class_of[v1], j = v_orbits.class_of[v2];
          cross.try_emplace({std::min(i, j), std::max(i, j), g.color(w1, w2)},
                            static_cast<Color>(cross.size()));
        } else if (w1 == w2 && pass == 1) {
          vertical.try_emplace({w_orbits.class_of[w1], 0, h.color(v1, v2)},
                               static_cast<Color>(vertical.size()));
        }
      }
  const Color offset = static_cast<Color>(cross.size());
  return ColoredGraph::from_function(n, [&](Point a, Point b) {
    const Point w1 = a % nw, w2 = b % nw, v1 = a / nw, v2 = b / nw;
    if (w1 != w2) {
      const std::size_t i = v_orbits.class_of[v1], j = v_orbits.class_of[v2];
      return cross.at({std::min(i, j), std::max(i, j), g.color(w1, w2)});
    }
    return offset + vertical.at({w_orbits.class_of[w1], 0, h.color(v1, v2)});
  });
}

ColoredGraph free_composition(const ColoredGraph& g, const ColoredGraph& h,
                              const Limits& limits) {
  return free_composition(g, h, orbits(automorphism_group(g, limits)),
                          orbits(automorphism_group(h, limits)));
}

bool is_subcoloring(const ColoredGraph& h, const ColoredGraph& g) {
  if (h.size() != g.size()) throw InvalidArgument("subcoloring needs equal vertex sets");
  const auto hu = h.upper(), gu = g.upper();
  std::unordered_map<Color, Color> coarse;
  for (std::size_t i = 0; i < hu.size(); ++i) {
    auto [it, fresh] = coarse.try_emplace(hu[i], gu[i]);
    if (it->second != gu[i]) return false;
  }
  return true;
}

bool color_equivalent(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.size() != b.size()) throw InvalidArgument("color equivalence needs equal vertex sets");
  return same_partition(a.upper(), b.upper());
}

bool color_equivalent(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.size() != b.size()) throw InvalidArgument("color equivalence needs equal vertex sets");
  const auto off_diagonal = [](const ColoredDigraph& g) {
    std::vector<Color> out;
    for (Point v = 0; v < g.size(); ++v)
      for (Point w = 0; w < g.size(); ++w)
        if (v != w) out.push_back(g.color(v, w));
    return out;
  };
  return same_partition(off_diagonal(a), off_diagonal(b)) &&
         same_partition(a.vertex_colors(), b.vertex_colors());
}

bool color_equivalent(const ColoredHypergraph& a, const ColoredHypergraph& b) {
  if (a.size() != b.size()) throw InvalidArgument("color equivalence needs equal vertex sets");
  return same_partition({a.colors().begin() + 1, a.colors().end()},
                        {b.colors().begin() + 1, b.colors().end()});
}

}  // namespace wreath
