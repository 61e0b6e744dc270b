#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracle.hpp"
#include "wreath/errors.hpp"
#include "wreath/perm_group.hpp"

using namespace wreath;
using testing::cyc;

TEST_CASE("compose") {
  CHECK(compose(Permutation::identity(3), Permutation::identity(3)) == Permutation::identity(3));
  CHECK(compose(cyc(3, "(0 1 2)"), cyc(3, "(0 1 2)")) == cyc(3, "(0 2 1)"));
  CHECK(compose(cyc(2, "(0 1)"), cyc(2, "(0 1)")).is_identity());
  // right action: apply p then q
  Permutation p = cyc(3, "(0 1)"), q = cyc(3, "(1 2)");
  CHECK(compose(p, q)[0] == 2);
  CHECK_THROWS_AS(compose(cyc(2, "(0 1)"), cyc(3, "(0 1)")), InvalidArgument);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(cyc(3, "(0 1 2)")) == cyc(3, "(0 2 1)"));
  CHECK(inverse(cyc(4, "(0 1)(2 3)")) == cyc(4, "(0 1)(2 3)"));
}

TEST_CASE("permutation validation and notation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK(Permutation::identity(3).to_string() == "()");
  CHECK(cyc(5, "(3 4)(0 2 1)").to_string() == "(0 2 1)(3 4)");
  CHECK(cyc(4, "(0 1 2)").is_even());
  CHECK_FALSE(cyc(4, "(0 1 2 3)").is_even());
}

TEST_CASE("group axioms on random generators") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 5;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(testing::random_permutation(n, rng));
    PermGroup g = generate_group(n, gens);
    auto expect = oracle::elements(g);
    REQUIRE(g.elements() == expect);
    CHECK(g.order() == expect.size());
    std::set<Permutation> set(expect.begin(), expect.end());
    CHECK(set.count(Permutation::identity(n)));
    for (const auto& x : expect) {
      CHECK(set.count(inverse(x)));
      for (const auto& y : gens) CHECK(set.count(compose(x, y)));
    }
    // associativity on a sample
    for (std::size_t i = 0; i + 2 < expect.size() && i < 10; ++i)
      CHECK(compose(compose(expect[i], expect[i + 1]), expect[i + 2]) ==
            compose(expect[i], compose(expect[i + 1], expect[i + 2])));
    for (const auto& p : oracle::symmetric(n)) CHECK(g.contains(p) == set.count(p) > 0);
  }
}

TEST_CASE("generate_group") {
  CHECK(generate_group(3, {cyc(3, "(0 1 2)")}).order() == 3);
  CHECK(generate_group(3, {cyc(3, "(0 1)"), cyc(3, "(1 2)")}).order() == 6);
  PermGroup k4 = generate_group(4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")});
  CHECK(k4.order() == 4);
  CHECK(k4 == klein_group());
  CHECK_THROWS_AS(generate_group(1, {}), InvalidArgument);
  Limits tight;
  tight.order_cap = 100;
  CHECK_THROWS_AS(generate_group(6, {cyc(6, "(0 1)"), cyc(6, "(0 1 2 3 4 5)")}, tight),
                  CapExceeded);
}

TEST_CASE("catalog groups") {
  auto s3 = catalog_group("S3");
  CHECK(s3.order() == 6);
  CHECK(s3.degree() == 3);
  CHECK(catalog_group("A4").order() == 12);
  auto i2 = catalog_group("I2");
  CHECK(i2.order() == 1);
  CHECK(i2.degree() == 2);
  CHECK(catalog_group("D5").order() == 10);
  CHECK(catalog_group("C6").order() == 6);
  CHECK(catalog_group("K4").order() == 4);
  CHECK_THROWS_AS(catalog_group("Q8"), ParseError);
  CHECK_THROWS_AS(catalog_group("S1"), ParseError);
  for (const auto& name : testing::small_catalog()) {
    PermGroup g = catalog_group(name);
    CHECK(g.order() == oracle::elements(g).size());
  }
}

TEST_CASE("symmetric and alternating recognition") {
  CHECK(is_symmetric(symmetric_group(5)));
  CHECK_FALSE(is_symmetric(alternating_group(5)));
  CHECK(is_alternating(alternating_group(4)));
  CHECK_FALSE(is_alternating(cyclic_group(4)));
  CHECK(is_alternating(cyclic_group(3)));
  CHECK(cyclic_group(4).is_transitive());
  CHECK_FALSE(trivial_group(3).is_transitive());
  CHECK(cyclic_group(4).is_subgroup_of(dihedral_group(4)));
  CHECK_FALSE(dihedral_group(4).is_subgroup_of(cyclic_group(4)));
  CHECK(factorial(5) == 120);
}

TEST_CASE("group-spec parser") {
  auto c3 = testing::G("C3");
  CHECK(c3.degree() == 3);
  CHECK(c3.order() == 3);
  auto w = testing::G("wrp(S2,C3)");
  CHECK(w.degree() == 8);
  CHECK(w.order() == 24);
  CHECK(testing::G("perm(4; (0 1)(2 3), (0 2)(1 3))") == klein_group());
  CHECK(testing::G(" x( C2 , I3 ) ").degree() == 6);
  CHECK(testing::G("par(S3,2)").order() == 6);
  CHECK(testing::G("wr(S2, wr(S2,S2))").order() == 128);
  CHECK_THROWS_AS(testing::G("wr(S2"), ParseError);
  CHECK_THROWS_AS(testing::G("perm(3; (0 3))"), ParseError);
  CHECK_THROWS_AS(testing::G("S2 junk"), ParseError);
  try {
    testing::G("wr(S2,,S3)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}
