#pragma once

#include <optional>
#include <vector>

#include "wreath/perm_group.hpp"

namespace wreath {

// Point numbering used by every product in this library:
//
//   direct product, imprimitive wreath   (v, w) in V x W   ->  v*|W| + w
//   parallel multiple                    (w, i) in W x [t] ->  i*|W| + w
//   product action                       f in V^W          ->  base-|V|
//                                        numeral f(0) f(1) ... f(|W|-1),
//                                        f(0) most significant
//
// With these choices the imprimitive wreath of I_t by B and the parallel
// multiple of B by t are the same permutation set.

/// Certificate that a permutation lies in a wreath product: a base
/// permutation `beta` of W together with one fibre permutation per w.
struct WreathDecomposition {
  Permutation beta;
  std::vector<Permutation> alphas;

  friend bool operator==(const WreathDecomposition&, const WreathDecomposition&) = default;
};

PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// B acting simultaneously on t disjoint copies of its domain.
PermGroup parallel_multiple(const PermGroup& b, std::size_t t);

/// Imprimitive action on V x W: (v,w) -> (v alpha_w, w beta).
PermGroup wreath_imprimitive(const PermGroup& a, const PermGroup& b);

/// Product action on V^W: (f phi)(w) = (f(w beta)) alpha_w.
PermGroup wreath_product_action(const PermGroup& a, const PermGroup& b);

Permutation assemble_imprimitive(const WreathDecomposition& d);
Permutation assemble_product_action(const WreathDecomposition& d);

/// Inverse of assemble_imprimitive; nullopt when phi does not map fibres
/// V x {w} onto fibres.
std::optional<WreathDecomposition> decompose_imprimitive(const Permutation& phi,
                                                         std::size_t v_size,
                                                         std::size_t w_size);

/// Inverse of assemble_product_action. The certificate is unique when it
/// exists; nullopt when phi is not of product-action form.
std::optional<WreathDecomposition> decompose_product_action(const Permutation& phi,
                                                            std::size_t v_size,
                                                            std::size_t w_size);

/// Digits of a function index in the product-action numbering.
std::vector<Point> function_digits(std::size_t index, std::size_t v_size,
                                   std::size_t w_size);
std::size_t function_index(std::span<const Point> digits, std::size_t v_size);

/// Integer power with CapExceeded on overflow past `cap`.
std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap);

}  // namespace wreath
