#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wreath/closures.hpp"
#include "wreath/colored.hpp"
#include "wreath/orbits.hpp"
#include "wreath/perm_group.hpp"

namespace wreath {

/// Named groups: Sn, An, Cn, Dn (n >= 3), In, K4. Throws ParseError for
/// anything else.
PermGroup catalog_group(std::string_view name, const Limits& limits = {});

/// Group-spec expressions:
///
///   EXPR := NAME | wr(EXPR,EXPR) | wrp(EXPR,EXPR) | x(EXPR,EXPR)
///         | par(EXPR,int) | perm(int; cycles, cycles, ...)
///
/// wr is the imprimitive wreath product, wrp the product action, x the
/// direct product, par the parallel multiple. In perm(...) each generator
/// is written as juxtaposed cycles, e.g. perm(4; (0 1)(2 3), (0 2)(1 3)).
PermGroup parse_group_spec(std::string_view text, const Limits& limits = {});

/// Reads a single permutation written in cycle notation.
Permutation parse_permutation(std::size_t degree, std::string_view text);

using Json = nlohmann::ordered_json;

Json cycles_json(const Permutation& p);

/// {"degree": n, "generators": [[cycle, ...], ...]}
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j, const Limits& limits = {});

/// {"kind": "graph", "n": n, "colors": [upper triangle, row-major]}
Json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const Json& j);

/// {"kind": "digraph", "n": n, "colors": [n*n, diagonal ignored],
///  "vertex_colors": [...]}
Json digraph_to_json(const ColoredDigraph& g);
ColoredDigraph digraph_from_json(const Json& j);

/// {"kind": "hypergraph", "n": n, "colors": {"<bitmask>": color, ...}}
Json hypergraph_to_json(const ColoredHypergraph& h);
ColoredHypergraph hypergraph_from_json(const Json& j);

std::string graph_to_dot(const ColoredGraph& g);
std::string digraph_to_dot(const ColoredDigraph& g);

/// {"rank", "nsp", "orbitals": [...], "pairing": [...], "transposable"}
Json orbital_report_json(const PermGroup& g, const Limits& limits = {});

Json class_report_json(const ClassReport& r);

}  // namespace wreath
