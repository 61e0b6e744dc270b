#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "wreath/orbits.hpp"
#include "wreath/products.hpp"

using namespace wreath;
using testing::cyc;
using testing::G;

TEST_CASE("orbits") {
  auto k = orbits(klein_group());
  REQUIRE(k.size() == 1);
  CHECK(k.classes[0] == std::vector<Point>{0, 1, 2, 3});
  CHECK(orbits(G("I3")).size() == 3);
  auto p = orbits(parallel_multiple(G("C3"), 2));
  REQUIRE(p.size() == 2);
  CHECK(p.classes[0].size() == 3);
  CHECK(p.classes[1].size() == 3);
  CHECK(p.class_of[4] == 1);
}

TEST_CASE("orbitals of small groups") {
  auto s3 = orbitals(G("S3"));
  CHECK(s3.rank == 2);
  CHECK(s3.nsp == 0);
  auto i2 = orbitals(G("I2"));
  CHECK(i2.rank == 4);
  CHECK(i2.nsp == 1);
  CHECK(i2.orbital(0, 1) != i2.orbital(1, 0));
  auto c4 = orbitals(G("C4"));
  CHECK(c4.rank == 4);
  CHECK(c4.nsp == 1);
  std::size_t plus1 = c4.orbital(0, 1), plus3 = c4.orbital(0, 3), plus2 = c4.orbital(0, 2);
  CHECK(c4.pairing[plus1] == plus3);
  CHECK(c4.pairing[plus2] == plus2);
  CHECK(c4.trivial[c4.orbital(2, 2)]);
}

TEST_CASE("orbitals agree with enumeration") {
  for (const auto& name : testing::small_catalog()) {
    auto g = G(name);
    auto elems = oracle::elements(g);
    auto labels = oracle::orbital_labels(g.degree(), elems);
    auto data = orbitals(g);
    const std::size_t n = g.degree();
    std::set<std::size_t> distinct(labels.begin(), labels.end());
    CHECK(data.rank == distinct.size());
    for (std::size_t i = 0; i < n * n; ++i)
      for (std::size_t j = 0; j < n * n; ++j)
        CHECK((labels[i] == labels[j]) == (data.orbital_of[i] == data.orbital_of[j]));
    std::size_t nsp = 0;
    for (std::size_t l : distinct) {
      std::size_t rev = labels[(l % n) * n + l / n];
      nsp += rev != l;
    }
    CHECK(data.nsp == nsp / 2);
  }
}

TEST_CASE("transposing permutation") {
  auto i2 = transposing_permutation(G("I2"));
  REQUIRE(i2);
  CHECK(*i2 == cyc(2, "(0 1)"));
  auto s3 = transposing_permutation(G("S3"));
  REQUIRE(s3);
  CHECK(s3->is_identity());
  auto c3 = transposing_permutation(G("C3"));
  REQUIRE(c3);
  auto data = orbitals(G("C3"));
  CHECK(data.orbital((*c3)[0], (*c3)[1]) == data.orbital(1, 0));
  CHECK(data.orbital((*c3)[0], (*c3)[2]) == data.orbital(2, 0));
}

TEST_CASE("transposing permutation agrees with brute force") {
  for (const auto& name : testing::small_catalog()) {
    auto g = G(name);
    auto all = oracle::transposers(g.degree(), oracle::elements(g));
    auto found = transposing_permutation(g);
    CHECK_MESSAGE(found.has_value() == !all.empty(), name);
    if (found) CHECK(std::find(all.begin(), all.end(), *found) != all.end());
  }
}

TEST_CASE("subset orbits") {
  auto s = subset_orbits(G("S3"));
  CHECK(s.count == 3);
  auto c3 = subset_orbits(G("C3"));
  CHECK(c3.count == 3);
  CHECK(subset_orbits(G("I2")).count == 3);
  CHECK(image_of_subset(0b011, cyc(3, "(0 2)")) == 0b110);
}
