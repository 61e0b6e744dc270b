#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wreath/colored.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/search.hpp"

namespace wreath {

/// Exact automorphism groups by backtracking over vertex images, pruned by
/// color-degree invariants and forward checking. Throw CapExceeded above
/// the size caps and SearchTimeout past the time budget.
AutChain automorphism_chain(const ColoredGraph& g, const Limits& limits = {});
AutChain automorphism_chain(const ColoredDigraph& g, const Limits& limits = {});
AutChain automorphism_chain(const ColoredHypergraph& h, const Limits& limits = {});

PermGroup automorphism_group(const ColoredGraph& g, const Limits& limits = {});
PermGroup automorphism_group(const ColoredDigraph& g, const Limits& limits = {});
PermGroup automorphism_group(const ColoredHypergraph& h, const Limits& limits = {});

bool preserves(const ColoredGraph& g, const Permutation& p);
bool preserves(const ColoredDigraph& g, const Permutation& p);
bool preserves(const ColoredHypergraph& h, const Permutation& p);

enum class ClosureKind { gr, dgr, bgr };

std::string_view to_string(ClosureKind kind);

/// Aut(G*(A)), Aut(G(A)) or Aut(orbit hypergraph of A); always contains A.
PermGroup closure(const PermGroup& a, ClosureKind kind, const Limits& limits = {});

/// Comparison of a group with one of its closures.
struct ClosureVerdict {
  bool closed = false;
  std::uint64_t closure_order = 0;
  /// A closure generator outside the group, when one exists.
  std::optional<Permutation> witness;
};

ClosureVerdict compare_with_closure(const PermGroup& a, const PermGroup& closure);

struct ClassReport {
  std::uint64_t order = 0;
  bool in_gr = false;
  bool in_dgr = false;
  /// Empty when the degree is above the hypergraph cap.
  std::optional<bool> in_bgr;
  bool in_dgr_plus = false;
  bool is_i2 = false;

  std::optional<PermGroup> closure_gr, closure_dgr, closure_bgr;
  std::optional<Permutation> witness_gr, witness_dgr, witness_bgr;
  /// A permutation transposing all orbitals, if any.
  std::optional<Permutation> transposer;
};

ClassReport classify(const PermGroup& a, const Limits& limits = {});

/// True when the group is the trivial group on two points.
bool is_i2(const PermGroup& a);

/// A family of subsets (bitmasks) whose automorphism group is exactly `a`,
/// or nullopt once every union of subset-orbits of `a` has been tried.
std::optional<std::vector<std::uint32_t>> uncolored_hypergraph_representable(
    const PermGroup& a, const Limits& limits = {});

/// Automorphisms of an uncolored family of subsets.
PermGroup family_automorphisms(std::size_t n, const std::vector<std::uint32_t>& family,
                               const Limits& limits = {});

}  // namespace wreath
