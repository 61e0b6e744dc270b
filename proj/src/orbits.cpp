#include "wreath/orbits.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "wreath/errors.hpp"
#include "wreath/search.hpp"

namespace wreath {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Relabels union-find roots 0, 1, ... in order of first appearance.
std::vector<std::size_t> first_occurrence_labels(UnionFind& uf, std::size_t begin,
                                                 std::size_t end, std::size_t& count) {
  std::vector<std::size_t> root_label(end, OrbitalData::npos), label(end, OrbitalData::npos);
  count = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const std::size_t r = uf.find(i);
    if (root_label[r] == OrbitalData::npos) root_label[r] = count++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace

OrbitPartition orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  UnionFind uf(n);
  for (const Permutation& p : g.generators())
    for (Point x = 0; x < n; ++x) uf.unite(x, p[x]);
  std::size_t count = 0;
  OrbitPartition out;
  out.class_of = first_occurrence_labels(uf, 0, n, count);
  out.classes.resize(count);
  for (Point x = 0; x < n; ++x) out.classes[out.class_of[x]].push_back(x);
  return out;
}

OrbitalData orbitals(const PermGroup& g) {
  const std::size_t n = g.degree();
  UnionFind uf(n * n);
  for (const Permutation& p : g.generators())
    for (Point x = 0; x < n; ++x)
      for (Point y = 0; y < n; ++y) uf.unite(x * n + y, p[x] * n + p[y]);

  OrbitalData d;
  d.degree = n;
  std::size_t count = 0;
  d.orbital_of = first_occurrence_labels(uf, 0, n * n, count);
  d.rank = count;
  d.trivial.assign(count, false);
  d.pairing.assign(count, OrbitalData::npos);
  d.size.assign(count, 0);
  d.representative.assign(count, {0, 0});
  std::vector<bool> seen(count, false);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      const std::size_t o = d.orbital(x, y);
      ++d.size[o];
      if (!seen[o]) {
        seen[o] = true;
        d.representative[o] = {x, y};
        d.trivial[o] = x == y;
        d.pairing[o] = d.orbital(y, x);
      }
    }
  for (std::size_t o = 0; o < count; ++o)
    if (o < d.pairing[o]) ++d.nsp;

  d.star_orbital_of.assign(n * n, OrbitalData::npos);
  std::vector<std::size_t> star_of_orbital(count, OrbitalData::npos);
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y) {
      const std::size_t o = d.orbital(x, y);
      if (star_of_orbital[o] == OrbitalData::npos) {
        star_of_orbital[o] = d.star_count;
        star_of_orbital[d.pairing[o]] = d.star_count;
        ++d.star_count;
      }
      d.star_orbital_of[x * n + y] = d.star_orbital_of[y * n + x] = star_of_orbital[o];
    }
  return d;
}

std::optional<Permutation> transposing_permutation(const PermGroup& g, const Limits& limits) {
  const OrbitalData d = orbitals(g);
  if (d.all_self_paired()) return Permutation::identity(g.degree());
  const std::size_t n = g.degree();
  PairColoring forward{n, std::vector<Color>(n * n)}, reversed{n, std::vector<Color>(n * n)};
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      if (x == y) continue;
      forward.colors[x * n + y] = static_cast<Color>(d.orbital(x, y) + 1);
      reversed.colors[x * n + y] = static_cast<Color>(d.orbital(y, x) + 1);
    }
  // alpha with orbital(x alpha, y alpha) == orbital(y, x) for x != y: an
  // isomorphism from the reversed orbital digraph onto the orbital digraph.
  // Trivial orbitals are not constrained, so I2 is transposable via (0 1).
  return find_mapping({&reversed, &forward, {}}, {}, limits);
}

SubsetOrbits subset_orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (n > g.limits().hypergraph_cap || n > 24)
    throw CapExceeded("subset orbits on " + std::to_string(n) +
                      " points exceed the hypergraph cap " +
                      std::to_string(g.limits().hypergraph_cap));
  const std::size_t total = std::size_t{1} << n;
  UnionFind uf(total);
  for (const Permutation& p : g.generators())
    for (std::uint32_t m = 1; m < total; ++m) uf.unite(m, image_of_subset(m, p));
  SubsetOrbits out;
  out.degree = n;
  out.label = first_occurrence_labels(uf, 1, total, out.count);
  return out;
}

std::uint32_t image_of_subset(std::uint32_t mask, const Permutation& p) {
  std::uint32_t r = 0;
  while (mask) {
    const int b = std::countr_zero(mask);
    mask &= mask - 1;
    r |= std::uint32_t{1} << p[static_cast<Point>(b)];
  }
  return r;
}

}  // namespace wreath
