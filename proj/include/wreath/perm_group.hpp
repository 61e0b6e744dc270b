#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "wreath/limits.hpp"
#include "wreath/permutation.hpp"

namespace wreath {

/// A finite permutation group on {0..degree-1}, degree >= 2.
///
/// Immutable and cheap to copy (shared state). The element set is
/// materialized on first request and cached; it is refused with
/// CapExceeded when the order is above `limits().order_cap`. Groups built
/// by the product constructors and by the automorphism search know their
/// order and answer membership without materializing.
class PermGroup {
 public:
  using Enumerator = std::function<std::vector<Permutation>()>;
  using Membership = std::function<bool(const Permutation&)>;

  /// Optional shortcuts a constructor can supply.
  struct Backing {
    std::optional<std::uint64_t> order;
    Enumerator enumerate;
    Membership contains;
  };

  /// Group generated by `generators`; nothing is enumerated until needed.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            const Limits& limits = {});
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            Backing backing, const Limits& limits);

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const Limits& limits() const noexcept;

  /// Group order; saturates at UINT64_MAX for astronomically large groups.
  std::uint64_t order() const;

  /// All elements, sorted ascending. Throws CapExceeded above order_cap.
  const std::vector<Permutation>& elements() const;

  bool contains(const Permutation& p) const;
  bool is_trivial() const;
  bool is_transitive() const;
  bool is_subgroup_of(const PermGroup& other) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Closure of `generators` under composition, enumerated eagerly.
/// Throws CapExceeded ("group too large") past `limits.order_cap`, and
/// InvalidArgument for degree < 2 or mismatched generator degrees.
PermGroup generate_group(std::size_t degree, std::vector<Permutation> generators,
                         const Limits& limits = {});

PermGroup trivial_group(std::size_t degree, const Limits& limits = {});
PermGroup symmetric_group(std::size_t degree, const Limits& limits = {});
PermGroup alternating_group(std::size_t degree, const Limits& limits = {});
PermGroup cyclic_group(std::size_t degree, const Limits& limits = {});
PermGroup dihedral_group(std::size_t degree, const Limits& limits = {});
/// Regular Klein four-group on {0,1,2,3}.
PermGroup klein_group(const Limits& limits = {});

/// True when the group equals the full alternating group on its points.
bool is_alternating(const PermGroup& g);
/// True when the group equals the full symmetric group on its points.
bool is_symmetric(const PermGroup& g);

/// Factorial with saturation.
std::uint64_t factorial(std::size_t n);

}  // namespace wreath
