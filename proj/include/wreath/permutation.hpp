#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wreath {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// A bijection of {0, ..., degree-1}, acting on the right: `p[x]` is the
/// image of x under p, written xp.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {0..images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles. Points not mentioned are
  /// fixed; a point appearing twice is an error.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<Cycle>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Nontrivial cycles, each starting at its least point, ordered by that
  /// point.
  std::vector<Cycle> cycles() const;

  /// Cycle notation, "()" for the identity.
  std::string to_string() const;

  /// Parity via cycle decomposition.
  bool is_even() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend class PermutationBuilder;
};

/// Apply p first, then q: compose(p, q)[x] == q[p[x]].
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Unchecked construction for hot loops that build bijections by
/// construction (product actions, chain enumeration).
class PermutationBuilder {
 public:
  static Permutation adopt(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace wreath
