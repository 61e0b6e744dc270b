#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wreath/limits.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/permutation.hpp"

namespace wreath {

using Color = std::uint32_t;

/// Dense coloring of ordered pairs on {0..n-1}. Entry (x, y) with x != y is
/// the color of the arc or edge; entry (x, x) is the color of vertex x.
struct PairColoring {
  std::size_t n = 0;
  std::vector<Color> colors;

  Color operator()(Point x, Point y) const { return colors[x * n + y]; }
};

/// Constraint evaluated after every new assignment during a search.
/// `from` and `to` list the partial map in assignment order; the last
/// entries are the assignment just made. Return false to reject it.
using ExtensionCheck =
    std::function<bool(std::span<const Point> from, std::span<const Point> to)>;

/// Searches for bijections sigma with target(x sigma, y sigma) ==
/// source(x, y) for all ordered pairs, plus `extra`.
struct MappingProblem {
  const PairColoring* source = nullptr;
  const PairColoring* target = nullptr;
  ExtensionCheck extra;
};

/// Full automorphism group found by backtracking, stored as a chain of
/// transversals along the base 0, 1, ..., n-1: level i holds, for each
/// point y in the orbit of i under the pointwise stabilizer of 0..i-1, one
/// automorphism fixing 0..i-1 and sending i to y.
class AutChain {
 public:
  struct Level {
    Point base;
    std::vector<std::pair<Point, Permutation>> transversal;
  };

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Nontrivial levels only.
  const std::vector<Level>& levels() const noexcept { return levels_; }
  /// Product of orbit lengths; saturates at UINT64_MAX.
  std::uint64_t order() const noexcept { return order_; }

  bool contains(const Permutation& p) const;
  std::vector<Permutation> enumerate() const;

  /// View as a PermGroup with order and membership answered by the chain.
  PermGroup to_group(const Limits& limits) const;

 private:
  friend AutChain automorphism_chain(const PairColoring&, const ExtensionCheck&,
                                     const Limits&);
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

std::optional<Permutation> find_mapping(const MappingProblem& problem,
                                        std::span<const std::pair<Point, Point>> forced,
                                        const Limits& limits);

AutChain automorphism_chain(const PairColoring& coloring, const ExtensionCheck& extra,
                            const Limits& limits);

}  // namespace wreath
