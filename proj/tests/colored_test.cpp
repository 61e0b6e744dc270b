#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "wreath/closures.hpp"
#include "wreath/errors.hpp"
#include "wreath/colored.hpp"
#include "wreath/products.hpp"

using namespace wreath;
using testing::G;

namespace {

std::size_t distinct_colors(const ColoredHypergraph& h) {
  std::set<Color> s(h.colors().begin() + 1, h.colors().end());
  return s.size();
}

}  // namespace

TEST_CASE("orbital graphs") {
  CHECK(color_equivalent(orbital_graph(G("S4")), ColoredGraph::monochromatic(4)));
  CHECK(color_equivalent(orbital_graph(G("C3")), ColoredGraph::monochromatic(3)));
  CHECK(color_equivalent(orbital_graph(G("I3")), ColoredGraph::rainbow(3)));
  for (const auto& name : testing::small_catalog()) {
    auto g = G(name);
    CHECK(color_equivalent(orbital_graph(g), oracle::orbital_graph(g.degree(), oracle::elements(g))));
  }
}

TEST_CASE("orbital digraphs") {
  auto s3 = orbital_digraph(G("S3"));
  std::set<Color> arcs;
  for (Point v = 0; v < 3; ++v)
    for (Point w = 0; w < 3; ++w)
      if (v != w) arcs.insert(s3.color(v, w));
  CHECK(arcs.size() == 1);
  auto c3 = orbital_digraph(G("C3"));
  CHECK(c3.color(0, 1) == c3.color(1, 2));
  CHECK(c3.color(0, 1) == c3.color(2, 0));
  CHECK(c3.color(0, 2) == c3.color(1, 0));
  CHECK(c3.color(0, 1) != c3.color(0, 2));
  auto i2 = orbital_digraph(G("I2"));
  CHECK(i2.color(0, 1) != i2.color(1, 0));
  for (const auto& name : testing::small_catalog()) {
    auto g = G(name);
    CHECK(color_equivalent(orbital_digraph(g), oracle::orbital_digraph(g.degree(), oracle::elements(g))));
  }
}

TEST_CASE("orbit hypergraphs") {
  CHECK(distinct_colors(orbit_hypergraph(G("S3"))) == 3);
  CHECK(distinct_colors(orbit_hypergraph(G("I2"))) == 3);
  auto c3 = orbit_hypergraph(G("C3"));
  CHECK(distinct_colors(c3) == 3);
  CHECK(c3.color(0b001) == c3.color(0b100));
  CHECK(c3.color(0b011) == c3.color(0b101));
  for (const auto& name : testing::small_catalog()) {
    auto g = G(name);
    CHECK(color_equivalent(orbit_hypergraph(g), oracle::orbit_hypergraph(g.degree(), oracle::elements(g))));
  }
}

TEST_CASE("composition") {
  auto c = composition(ColoredGraph::monochromatic(2, 1), ColoredGraph::monochromatic(2, 2));
  CHECK(c.size() == 4);
  // fibre w = {w, w+2}
  CHECK(c.color(0, 2) == 2);
  CHECK(c.color(1, 3) == 2);
  CHECK(c.color(0, 1) == 1);
  CHECK(c.color(0, 3) == 1);
  CHECK(c.color(2, 1) == 1);
  CHECK(composition(ColoredGraph::rainbow(3), ColoredGraph::rainbow(4)).size() == 12);

  // G on W = G*(S2) shifted away from H's colors, H = G*(S3) on V
  ColoredGraph g = ColoredGraph::monochromatic(2, 7);
  auto comp = composition(g, orbital_graph(G("S3")));
  auto aut = oracle::aut(comp);
  CHECK(aut == oracle::elements(wreath_imprimitive(G("S3"), G("S2"))));
}

TEST_CASE("free composition") {
  // transitive factors with disjoint colors: same partition as composition
  auto g = ColoredGraph::monochromatic(3, 5), h = ColoredGraph::monochromatic(2, 0);
  CHECK(color_equivalent(free_composition(g, h), composition(g, h)));
  auto c3 = orbital_graph(G("C3"));
  CHECK(color_equivalent(free_composition(c3, c3),
                         orbital_graph(wreath_imprimitive(G("C3"), G("C3")))));
  CHECK(color_equivalent(free_composition(orbital_graph(G("C4")), orbital_graph(G("S2"))),
                         orbital_graph(wreath_imprimitive(G("S2"), G("C4")))));
  // the vertical and cross-fibre ranges never meet
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t nw = 2 + trial % 3, nv = 2 + trial % 2;
    auto rnd = [&](std::size_t n) {
      return ColoredGraph::from_function(n, [&](Point, Point) { return Color(rng() % 3); });
    };
    auto gw = rnd(nw), hv = rnd(nv);
    auto f = free_composition(gw, hv);
    std::set<Color> vertical, cross;
    for (Point x = 0; x < nw * nv; ++x)
      for (Point y = x + 1; y < nw * nv; ++y)
        (x % nw == y % nw ? vertical : cross).insert(f.color(x, y));
    for (Color c : vertical) CHECK_FALSE(cross.count(c));
  }
}

TEST_CASE("subcolorings") {
  CHECK(is_subcoloring(ColoredGraph::rainbow(3), ColoredGraph::monochromatic(3)));
  CHECK_FALSE(is_subcoloring(ColoredGraph::monochromatic(3), ColoredGraph::rainbow(3)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    auto g = ColoredGraph::from_function(n, [&](Point, Point) { return Color(rng() % 3); });
    CHECK(is_subcoloring(orbital_graph(automorphism_group(g)), g));
  }
}

TEST_CASE("color equivalence") {
  auto g = orbital_graph(G("D5"));
  CHECK(color_equivalent(g, g));
  CHECK(color_equivalent(ColoredGraph::monochromatic(3, 5), ColoredGraph::monochromatic(3, 9)));
  CHECK_FALSE(color_equivalent(ColoredGraph::monochromatic(3), ColoredGraph::rainbow(3)));
  CHECK_THROWS_AS(color_equivalent(ColoredGraph::monochromatic(3), ColoredGraph::monochromatic(4)),
                  InvalidArgument);
}

TEST_CASE("graph construction") {
  ColoredGraph g(3, {1, 2, 3});
  CHECK(g.color(1, 0) == 1);
  CHECK(g.color(2, 1) == 3);
  CHECK(g.upper() == std::vector<Color>{1, 2, 3});
  CHECK(g.color_count() == 3);
  CHECK(g.with_color(0, 2, 1).color(2, 0) == 1);
}
