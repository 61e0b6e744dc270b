#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wreath/perm_group.hpp"

namespace wreath {

/// Partition of {0..n-1} into classes; classes sorted by least element.
struct OrbitPartition {
  std::vector<std::vector<Point>> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

OrbitPartition orbits(const PermGroup& g);

/// Orbits of a group on ordered pairs (orbitals) and unordered pairs
/// (2*-orbitals). Orbitals are numbered by their least ordered pair in
/// row-major order; 2*-orbitals by their least unordered pair {x < y}.
struct OrbitalData {
  std::size_t degree = 0;
  std::vector<std::size_t> orbital_of;       // index x*degree + y
  std::vector<bool> trivial;                 // per orbital: consists of (v,v) pairs
  std::vector<std::size_t> pairing;          // per orbital: the reversed orbital
  std::vector<std::size_t> size;             // per orbital
  std::vector<std::pair<Point, Point>> representative;  // least pair
  std::vector<std::size_t> star_orbital_of;  // symmetric; diagonal = npos
  std::size_t star_count = 0;
  std::size_t rank = 0;
  std::size_t nsp = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t orbital(Point x, Point y) const { return orbital_of[x * degree + y]; }
  std::size_t star_orbital(Point x, Point y) const { return star_orbital_of[x * degree + y]; }
  bool all_self_paired() const noexcept { return nsp == 0; }
};

OrbitalData orbitals(const PermGroup& g);

/// Some alpha in S_n with O alpha = paired(O) for every nontrivial orbital O, or
/// nullopt when none exists. Returns the identity when every orbital is
/// self-paired.
std::optional<Permutation> transposing_permutation(const PermGroup& g,
                                                   const Limits& limits = {});

/// Orbit label of every nonempty subset (bitmask index; entry 0 unused),
/// numbered by least bitmask. Requires degree <= limits.hypergraph_cap.
struct SubsetOrbits {
  std::size_t degree = 0;
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

SubsetOrbits subset_orbits(const PermGroup& g);

/// Image of a subset bitmask under p.
std::uint32_t image_of_subset(std::uint32_t mask, const Permutation& p);

}  // namespace wreath
