#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wreath/orbits.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/search.hpp"

namespace wreath {

/// Complete graph on {0..n-1} with a color on every edge {v, w}, v != w.
class ColoredGraph {
 public:
  /// `upper` lists the colors of {i, j}, i < j, in row-major order.
  ColoredGraph(std::size_t n, const std::vector<Color>& upper);

  static ColoredGraph from_function(std::size_t n,
                                    const std::function<Color(Point, Point)>& color);
  static ColoredGraph monochromatic(std::size_t n, Color c = 0);
  /// Every edge a distinct color.
  static ColoredGraph rainbow(std::size_t n);

  std::size_t size() const noexcept { return pairs_.n; }
  Color color(Point v, Point w) const { return pairs_(v, w); }
  std::vector<Color> upper() const;
  std::size_t color_count() const;

  ColoredGraph with_color(Point v, Point w, Color c) const;

  /// Symmetric pair coloring, diagonal 0, as consumed by the search.
  const PairColoring& pairs() const noexcept { return pairs_; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.pairs_.n == b.pairs_.n && a.pairs_.colors == b.pairs_.colors;
  }

 private:
  ColoredGraph() = default;
  PairColoring pairs_;
};

/// Complete digraph on {0..n-1}: a color on every arc (v, w), v != w, and
/// a color on every vertex.
class ColoredDigraph {
 public:
  /// `arcs` is the row-major n x n matrix; its diagonal is ignored.
  ColoredDigraph(std::size_t n, const std::vector<Color>& arcs,
                 std::vector<Color> vertex_colors = {});

  std::size_t size() const noexcept { return pairs_.n; }
  Color color(Point v, Point w) const { return pairs_(v, w); }
  Color vertex_color(Point v) const { return pairs_(v, v); }
  std::vector<Color> arcs() const;
  std::vector<Color> vertex_colors() const;

  /// Pair coloring with vertex colors on the diagonal.
  const PairColoring& pairs() const noexcept { return pairs_; }

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
    return a.pairs_.n == b.pairs_.n && a.pairs_.colors == b.pairs_.colors;
  }

 private:
  PairColoring pairs_;
};

/// A color on every nonempty subset of {0..n-1}, subsets as bitmasks.
class ColoredHypergraph {
 public:
  /// `colors[mask]` for mask in 1..2^n-1; entry 0 is ignored.
  ColoredHypergraph(std::size_t n, std::vector<Color> colors);

  std::size_t size() const noexcept { return n_; }
  Color color(std::uint32_t mask) const { return colors_[mask]; }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  friend bool operator==(const ColoredHypergraph&, const ColoredHypergraph&) = default;

 private:
  std::size_t n_;
  std::vector<Color> colors_;
};

/// G*(A): edge color = 2*-orbital index.
ColoredGraph orbital_graph(const PermGroup& a);
/// G(A): arc color = orbital index; vertex color = orbit index.
ColoredDigraph orbital_digraph(const PermGroup& a);
/// Each nonempty subset colored by its orbit under the group.
ColoredHypergraph orbit_hypergraph(const PermGroup& b);

// Graph products below live on W x V for G on W and H on V; vertex (w, v)
// has index v*|W| + w, the numbering of the imprimitive wreath product
// Aut(H) wr Aut(G).

/// Lexicographic product G o H: cross-fibre edges take G's color, edges
/// inside a fibre take H's color. Colors are not made disjoint.
ColoredGraph composition(const ColoredGraph& g, const ColoredGraph& h);

/// Free composition of G (on W) and H (on V). A cross-fibre edge is
/// colored by the G-color d of its base edge together with the unordered
/// pair of orbit indices of its two fibre coordinates; an edge inside
/// fibre w is colored by the orbit index of w together with its H-color.
/// The two kinds occupy disjoint ranges, cross-fibre colors first.
///
/// This overload takes the orbits of Aut(G) and Aut(H).
ColoredGraph free_composition(const ColoredGraph& g, const ColoredGraph& h,
                              const Limits& limits = {});

/// Same construction with caller-supplied orbit partitions of W and V.
ColoredGraph free_composition(const ColoredGraph& g, const ColoredGraph& h,
                              const OrbitPartition& w_orbits,
                              const OrbitPartition& v_orbits);

/// True iff H's edge-color partition refines G's (H is a subcoloring).
bool is_subcoloring(const ColoredGraph& h, const ColoredGraph& g);

/// True iff the two color functions induce the same partition.
bool color_equivalent(const ColoredGraph& a, const ColoredGraph& b);
bool color_equivalent(const ColoredDigraph& a, const ColoredDigraph& b);
bool color_equivalent(const ColoredHypergraph& a, const ColoredHypergraph& b);

}  // namespace wreath
