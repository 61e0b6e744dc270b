#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wreath/errors.hpp"
#include "wreath/io.hpp"

using namespace wreath;
using testing::cyc;
using testing::G;

TEST_CASE("permutation text") {
  CHECK(parse_permutation(4, "(0 1)(2 3)") == cyc(4, "(2 3)(0 1)"));
  CHECK(parse_permutation(3, "()").is_identity());
  CHECK_THROWS_AS(parse_permutation(3, "(0 5)"), ParseError);
  CHECK_THROWS_AS(parse_permutation(3, "(0 1"), ParseError);
}

TEST_CASE("group json round trip") {
  for (const char* spec : {"S4", "K4", "wr(C2,C3)", "wrp(S2,S3)", "I3"}) {
    auto g = G(spec);
    auto j = group_to_json(g);
    CHECK(j["degree"] == g.degree());
    auto back = group_from_json(Json::parse(j.dump()));
    CHECK(back == g);
  }
  CHECK_THROWS(group_from_json(Json::parse(R"({"degree": 3, "generators": [[[0, 7]]]})")));
}

TEST_CASE("structure json round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 5;
    auto g = ColoredGraph::from_function(n, [&](Point, Point) { return Color(rng() % 4); });
    auto j = graph_to_json(g);
    CHECK(j["kind"] == "graph");
    CHECK(graph_from_json(Json::parse(j.dump())) == g);

    std::vector<Color> arcs(n * n), vertex(n);
    for (auto& c : arcs) c = rng() % 3;
    for (auto& c : vertex) c = rng() % 2;
    ColoredDigraph d(n, arcs, vertex);
    CHECK(digraph_from_json(Json::parse(digraph_to_json(d).dump())) == d);

    std::vector<Color> sub(std::size_t{1} << n);
    for (auto& c : sub) c = rng() % 5;
    ColoredHypergraph h(n, sub);
    CHECK(color_equivalent(hypergraph_from_json(Json::parse(hypergraph_to_json(h).dump())), h));
  }
  CHECK_THROWS(graph_from_json(Json::parse(R"({"kind": "graph", "n": 3, "colors": [1]})")));
}

TEST_CASE("dot output") {
  auto dot = graph_to_dot(orbital_graph(G("C4")));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  auto ddot = digraph_to_dot(orbital_digraph(G("C3")));
  CHECK(ddot.find("0 -> 1") != std::string::npos);
}

TEST_CASE("reports") {
  auto r = orbital_report_json(G("C4"));
  CHECK(r["rank"] == 4);
  CHECK(r["nsp"] == 1);
  CHECK(r["transposable"] == true);
  auto c = class_report_json(classify(G("C4")));
  CHECK(c["gr"] == false);
  CHECK(c["dgr"] == true);
  CHECK(c["bgr"] == false);
  CHECK(c["dgr_plus"] == false);
}
