#include "wreath/closures.hpp"

#include <bit>
#include <string>

#include "wreath/errors.hpp"
#include "wreath/orbits.hpp"

namespace wreath {

namespace {

void check_hypergraph(std::size_t n, const Limits& limits) {
  if (n > limits.hypergraph_cap)
    throw CapExceeded("hypergraph on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(limits.hypergraph_cap));
}

PairColoring hypergraph_pairs(const ColoredHypergraph& h) {
  const std::size_t n = h.size();
  PairColoring pc{n, std::vector<Color>(n * n)};
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      pc.colors[x * n + y] = h.color((1u << x) | (1u << y));
  return pc;
}

// Checks every subset of size >= 3 containing the newest assigned vertex.
ExtensionCheck hypergraph_check(const ColoredHypergraph& h) {
  return [&h](std::span<const Point> from, std::span<const Point> to) {
    const std::size_t k = from.size();
    if (k < 3) return true;
    const std::uint32_t fx = 1u << from[k - 1], tx = 1u << to[k - 1];
    const std::size_t prior = k - 1;
    std::vector<std::uint32_t> fm(std::size_t{1} << prior), tm(fm.size());
    for (std::uint32_t b = 1; b < fm.size(); ++b) {
      const int low = std::countr_zero(b);
      fm[b] = fm[b & (b - 1)] | (1u << from[low]);
      tm[b] = tm[b & (b - 1)] | (1u << to[low]);
      if (std::popcount(b) >= 2 && h.color(fm[b] | fx) != h.color(tm[b] | tx)) return false;
    }
    return true;
  };
}

}  // namespace

AutChain automorphism_chain(const ColoredGraph& g, const Limits& limits) {
  return automorphism_chain(g.pairs(), {}, limits);
}

AutChain automorphism_chain(const ColoredDigraph& g, const Limits& limits) {
  return automorphism_chain(g.pairs(), {}, limits);
}

AutChain automorphism_chain(const ColoredHypergraph& h, const Limits& limits) {
  check_hypergraph(h.size(), limits);
  const PairColoring pc = hypergraph_pairs(h);
  return automorphism_chain(pc, hypergraph_check(h), limits);
}

PermGroup automorphism_group(const ColoredGraph& g, const Limits& limits) {
  return automorphism_chain(g, limits).to_group(limits);
}

PermGroup automorphism_group(const ColoredDigraph& g, const Limits& limits) {
  return automorphism_chain(g, limits).to_group(limits);
}

PermGroup automorphism_group(const ColoredHypergraph& h, const Limits& limits) {
  return automorphism_chain(h, limits).to_group(limits);
}

bool preserves(const ColoredGraph& g, const Permutation& p) {
  if (p.degree() != g.size()) return false;
  for (Point v = 0; v < g.size(); ++v)
    for (Point w = v + 1; w < g.size(); ++w)
      if (g.color(p[v], p[w]) != g.color(v, w)) return false;
  return true;
}

bool preserves(const ColoredDigraph& g, const Permutation& p) {
  if (p.degree() != g.size()) return false;
  for (Point v = 0; v < g.size(); ++v)
    for (Point w = 0; w < g.size(); ++w)
      if (g.color(p[v], p[w]) != g.color(v, w)) return false;
  return true;
}

bool preserves(const ColoredHypergraph& h, const Permutation& p) {
  if (p.degree() != h.size()) return false;
  const std::uint32_t full = (1u << h.size()) - 1;
  for (std::uint32_t m = 1; m <= full; ++m)
    if (h.color(image_of_subset(m, p)) != h.color(m)) return false;
  return true;
}

std::string_view to_string(ClosureKind kind) {
  switch (kind) {
    case ClosureKind::gr: return "gr";
    case ClosureKind::dgr: return "dgr";
    case ClosureKind::bgr: return "bgr";
  }
  return "?";
}

PermGroup closure(const PermGroup& a, ClosureKind kind, const Limits& limits) {
  switch (kind) {
    case ClosureKind::gr: return automorphism_group(orbital_graph(a), limits);
    case ClosureKind::dgr: return automorphism_group(orbital_digraph(a), limits);
    case ClosureKind::bgr:
      check_hypergraph(a.degree(), limits);
      return automorphism_group(orbit_hypergraph(a), limits);
  }
  throw InvalidArgument("unknown closure kind");
}

ClosureVerdict compare_with_closure(const PermGroup& a, const PermGroup& closure) {
  ClosureVerdict v;
  v.closure_order = closure.order();
  v.closed = v.closure_order == a.order();
  if (!v.closed)
    for (const Permutation& g : closure.generators())
      if (!a.contains(g)) {
        v.witness = g;
        break;
      }
  return v;
}

bool is_i2(const PermGroup& a) { return a.degree() == 2 && a.is_trivial(); }

ClassReport classify(const PermGroup& a, const Limits& limits) {
  ClassReport r;
  r.order = a.order();
  r.is_i2 = is_i2(a);

  r.closure_gr = closure(a, ClosureKind::gr, limits);
  const ClosureVerdict gr = compare_with_closure(a, *r.closure_gr);
  r.in_gr = gr.closed;
  r.witness_gr = gr.witness;

  r.closure_dgr = closure(a, ClosureKind::dgr, limits);
  const ClosureVerdict dgr = compare_with_closure(a, *r.closure_dgr);
  r.in_dgr = dgr.closed;
  r.witness_dgr = dgr.witness;

  if (a.degree() <= limits.hypergraph_cap) {
    r.closure_bgr = closure(a, ClosureKind::bgr, limits);
    const ClosureVerdict bgr = compare_with_closure(a, *r.closure_bgr);
    r.in_bgr = bgr.closed;
    r.witness_bgr = bgr.witness;
  }

  r.transposer = transposing_permutation(a, limits);
  r.in_dgr_plus = r.in_dgr && (!r.transposer || r.in_gr || r.is_i2);
  return r;
}

PermGroup family_automorphisms(std::size_t n, const std::vector<std::uint32_t>& family,
                               const Limits& limits) {
  check_hypergraph(n, limits);
  std::vector<Color> colors(std::size_t{1} << n, 0);
  for (std::uint32_t m : family) {
    if (m == 0 || m >= colors.size()) throw InvalidArgument("subset out of range");
    colors[m] = 1;
  }
  return automorphism_group(ColoredHypergraph(n, std::move(colors)), limits);
}

std::optional<std::vector<std::uint32_t>> uncolored_hypergraph_representable(
    const PermGroup& a, const Limits& limits) {
  const std::size_t n = a.degree();
  check_hypergraph(n, limits);
  const SubsetOrbits so = subset_orbits(a);
  if (so.count > limits.family_orbit_cap)
    throw CapExceeded(std::to_string(so.count) + " subset-orbits exceed the family cap " +
                      std::to_string(limits.family_orbit_cap));
  const std::uint64_t target = a.order();
  // A family and its complement share automorphisms; the top orbit stays out.
  const std::uint64_t choices = std::uint64_t{1} << (so.count - 1);
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    std::vector<Color> colors(so.label.size(), 0);
    for (std::size_t m = 1; m < so.label.size(); ++m)
      colors[m] = (pick >> so.label[m]) & 1u;
    const ColoredHypergraph h(n, std::move(colors));
    if (automorphism_chain(h, limits).order() != target) continue;
    std::vector<std::uint32_t> family;
    for (std::uint32_t m = 1; m < h.colors().size(); ++m)
      if (h.color(m)) family.push_back(m);
    return family;
  }
  return std::nullopt;
}

}  // namespace wreath
