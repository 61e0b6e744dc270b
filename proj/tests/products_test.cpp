#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "wreath/errors.hpp"
#include "wreath/products.hpp"

using namespace wreath;
using testing::cyc;
using testing::G;

namespace {

/// Every permutation of V x W built from beta in B and alpha_w in A,
/// enumerated independently of the library's generators.
std::set<Permutation> imprimitive_oracle(const PermGroup& a, const PermGroup& b) {
  const std::size_t nv = a.degree(), nw = b.degree();
  auto ea = oracle::elements(a), eb = oracle::elements(b);
  std::set<Permutation> out;
  std::vector<std::size_t> pick(nw, 0);
  for (const auto& beta : eb) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Point> img(nv * nw);
      for (Point v = 0; v < nv; ++v)
        for (Point w = 0; w < nw; ++w) img[v * nw + w] = ea[pick[w]][v] * nw + beta[w];
      out.insert(Permutation(img));
      std::size_t k = 0;
      while (k < nw && ++pick[k] == ea.size()) pick[k++] = 0;
      if (k == nw) break;
    }
  }
  return out;
}

std::set<Permutation> product_action_oracle(const PermGroup& a, const PermGroup& b) {
  const std::size_t nv = a.degree(), nw = b.degree();
  auto ea = oracle::elements(a), eb = oracle::elements(b);
  std::size_t n = 1;
  for (std::size_t i = 0; i < nw; ++i) n *= nv;
  std::set<Permutation> out;
  std::vector<std::size_t> pick(nw, 0);
  for (const auto& beta : eb) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Point> img(n);
      for (std::size_t f = 0; f < n; ++f) {
        auto digits = function_digits(f, nv, nw);
        std::vector<Point> g(nw);
        for (Point w = 0; w < nw; ++w) g[w] = ea[pick[w]][digits[beta[w]]];
        img[f] = static_cast<Point>(function_index(g, nv));
      }
      out.insert(Permutation(img));
      std::size_t k = 0;
      while (k < nw && ++pick[k] == ea.size()) pick[k++] = 0;
      if (k == nw) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("direct product") {
  auto d = direct_product(G("S2"), G("S2"));
  CHECK(d.degree() == 4);
  CHECK(d.order() == 4);
  auto t = direct_product(G("I2"), G("I3"));
  CHECK(t.degree() == 6);
  CHECK(t.is_trivial());
  CHECK(direct_product(G("C3"), G("S2")).order() == 6);
}

TEST_CASE("parallel multiple") {
  CHECK(parallel_multiple(G("C3"), 1) == G("C3"));
  auto p = parallel_multiple(G("C3"), 2);
  CHECK(p.degree() == 6);
  CHECK(p.order() == 3);
  CHECK(p.contains(cyc(6, "(0 1 2)(3 4 5)")));
  CHECK_FALSE(p.contains(cyc(6, "(0 1 2)")));
  auto s = parallel_multiple(G("S2"), 3);
  CHECK(s.degree() == 6);
  CHECK(s.order() == 2);
}

TEST_CASE("imprimitive wreath product") {
  auto w = wreath_imprimitive(G("C2"), G("C3"));
  CHECK(w.degree() == 6);
  CHECK(w.order() == 24);
  auto i = wreath_imprimitive(G("I2"), G("C3"));
  CHECK(i.order() == 3);
  CHECK(i.elements() == parallel_multiple(G("C3"), 2).elements());
  CHECK(wreath_imprimitive(G("S2"), G("I2")).order() == 4);
  const char* pairs[][2] = {{"C2", "C3"}, {"S3", "S2"}, {"I2", "S3"}, {"K4", "I2"},
                            {"C3", "C3"}, {"S2", "I3"}, {"I3", "S2"}};
  for (auto& [a, b] : pairs) {
    auto oracle_set = imprimitive_oracle(G(a), G(b));
    auto lib = wreath_imprimitive(G(a), G(b));
    CHECK(lib.order() == oracle_set.size());
    CHECK(oracle::elements(lib) == oracle::sorted(oracle_set));
  }
}

TEST_CASE("product action") {
  auto w = wreath_product_action(G("C2"), G("C3"));
  CHECK(w.degree() == 8);
  CHECK(w.order() == 24);
  CHECK(wreath_product_action(G("S2"), G("S3")).order() == 48);
  CHECK(wreath_product_action(G("I2"), G("C3")).order() == 3);
  const char* pairs[][2] = {{"C2", "C3"}, {"S2", "S3"}, {"I2", "A4"}, {"S3", "S2"},
                            {"C3", "I2"}, {"S2", "I3"}};
  for (auto& [a, b] : pairs) {
    auto oracle_set = product_action_oracle(G(a), G(b));
    auto lib = wreath_product_action(G(a), G(b));
    CHECK(lib.order() == oracle_set.size());
    CHECK(oracle::elements(lib) == oracle::sorted(oracle_set));
  }
  Limits tight;
  tight.point_cap = 100;
  CHECK_THROWS_AS(wreath_product_action(catalog_group("S2", tight), G("S8")), CapExceeded);
}

TEST_CASE("imprimitive decomposition round trip") {
  auto id = decompose_imprimitive(Permutation::identity(6), 2, 3);
  REQUIRE(id);
  CHECK(id->beta.is_identity());
  for (const auto& a : id->alphas) CHECK(a.is_identity());
  auto w = wreath_imprimitive(G("C2"), G("C3"));
  auto c2 = G("C2"), c3 = G("C3");
  for (const auto& phi : w.elements()) {
    auto d = decompose_imprimitive(phi, 2, 3);
    REQUIRE(d);
    CHECK(c3.contains(d->beta));
    for (const auto& a : d->alphas) CHECK(c2.contains(a));
    CHECK(assemble_imprimitive(*d) == phi);
  }
  // (0,0) <-> (1,1) with (0,1), (1,0) fixed breaks the fibres
  CHECK_FALSE(decompose_imprimitive(cyc(4, "(0 3)"), 2, 2));
}

TEST_CASE("product-action decomposition round trip") {
  auto id = decompose_product_action(Permutation::identity(8), 2, 3);
  REQUIRE(id);
  CHECK(id->beta.is_identity());
  auto w = wreath_product_action(G("C2"), G("C3"));
  auto c2 = G("C2"), c3 = G("C3");
  for (const auto& phi : w.elements()) {
    auto d = decompose_product_action(phi, 2, 3);
    REQUIRE(d);
    CHECK(c3.contains(d->beta));
    for (const auto& a : d->alphas) CHECK(c2.contains(a));
    CHECK(assemble_product_action(*d) == phi);
  }
  // 00 <-> 01 with 10 and 11 fixed: no assembly produces it
  Permutation swap = cyc(4, "(0 1)");
  CHECK_FALSE(decompose_product_action(swap, 2, 2));
  int hits = 0;
  for (const auto& beta : oracle::symmetric(2))
    for (const auto& a0 : oracle::symmetric(2))
      for (const auto& a1 : oracle::symmetric(2))
        hits += assemble_product_action({beta, {a0, a1}}) == swap;
  CHECK(hits == 0);
  // swapping only the two constant functions is an assembly: beta and both
  // alphas the transposition
  Permutation constants = cyc(4, "(0 3)");
  auto d = decompose_product_action(constants, 2, 2);
  REQUIRE(d);
  CHECK(assemble_product_action(*d) == constants);
}

TEST_CASE("random round trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t nv = 2 + trial % 3, nw = 2 + (trial / 3) % 3;
    WreathDecomposition d{testing::random_permutation(nw, rng), {}};
    for (std::size_t w = 0; w < nw; ++w) d.alphas.push_back(testing::random_permutation(nv, rng));
    auto phi = assemble_imprimitive(d);
    CHECK(decompose_imprimitive(phi, nv, nw) == d);
    auto psi = assemble_product_action(d);
    CHECK(decompose_product_action(psi, nv, nw) == d);
  }
}

TEST_CASE("function digits") {
  auto d = function_digits(5, 2, 3);
  CHECK(d == std::vector<Point>{1, 0, 1});
  CHECK(function_index(d, 2) == 5);
  CHECK(checked_power(3, 4, 1000) == 81);
  CHECK_THROWS_AS(checked_power(2, 20, 1000), CapExceeded);
}
