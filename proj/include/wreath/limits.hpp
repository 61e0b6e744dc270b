#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace wreath {

/// Computation ceilings. Every constructor and search takes one of these;
/// the defaults are the CLI defaults.
struct Limits {
  /// Largest group that may be materialized element by element.
  std::uint64_t order_cap = 1'000'000;
  /// Largest point set a product construction may create.
  std::size_t point_cap = 4096;
  /// Largest colored graph/digraph handed to the automorphism search.
  std::size_t graph_cap = 256;
  /// Largest vertex count for hypergraphs (2^n - 1 colored subsets).
  std::size_t hypergraph_cap = 16;
  /// Largest number of subset-orbits tried exhaustively when looking for an
  /// uncolored hypergraph representation.
  std::size_t family_orbit_cap = 20;
  /// Wall-clock budget for a single backtracking search; zero disables it.
  std::chrono::milliseconds timeout{60'000};
};

/// Saturating product used for group orders.
constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

/// Saturating power used for |A|^|W| style order formulas.
constexpr std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace wreath
