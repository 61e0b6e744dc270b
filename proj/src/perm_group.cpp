#include "wreath/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "wreath/errors.hpp"

namespace wreath {

struct PermGroup::Impl {
  std::size_t degree;
  std::vector<Permutation> generators;
  Backing backing;
  Limits limits;

  mutable std::once_flag once;
  mutable std::vector<Permutation> elements;

  const std::vector<Permutation>& materialize() const {
    std::call_once(once, [this] {
      if (backing.order && *backing.order > limits.order_cap)
        throw CapExceeded("group too large: order " +
                          std::to_string(*backing.order) + " exceeds order cap " +
                          std::to_string(limits.order_cap));
      std::vector<Permutation> els =
          backing.enumerate ? backing.enumerate() : closure();
      std::sort(els.begin(), els.end());
      els.erase(std::unique(els.begin(), els.end()), els.end());
      elements = std::move(els);
    });
    return elements;
  }

  std::vector<Permutation> closure() const {
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> queue{Permutation::identity(degree)};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Permutation& g : generators) {
        Permutation h = compose(queue[head], g);
        if (seen.insert(h).second) {
          if (seen.size() > limits.order_cap)
            throw CapExceeded("group too large: more than " +
                              std::to_string(limits.order_cap) + " elements");
          queue.push_back(std::move(h));
        }
      }
    }
    return queue;
  }
};

namespace {

void check_generators(std::size_t degree, const std::vector<Permutation>& gens) {
  if (degree < 2) throw InvalidArgument("permutation groups need degree >= 2");
  for (const Permutation& g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("generator " + g.to_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " +
                            std::to_string(degree));
}

std::vector<Permutation> drop_identities(std::vector<Permutation> gens) {
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     const Limits& limits)
    : PermGroup(degree, std::move(generators), Backing{}, limits) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     Backing backing, const Limits& limits) {
  check_generators(degree, generators);
  impl_ = std::make_shared<Impl>();
  impl_->degree = degree;
  impl_->generators = drop_identities(std::move(generators));
  impl_->backing = std::move(backing);
  impl_->limits = limits;
}

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept {
  return impl_->generators;
}
const Limits& PermGroup::limits() const noexcept { return impl_->limits; }

std::uint64_t PermGroup::order() const {
  if (impl_->backing.order) return *impl_->backing.order;
  if (impl_->generators.empty()) return 1;
  return impl_->materialize().size();
}

const std::vector<Permutation>& PermGroup::elements() const {
  return impl_->materialize();
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) return false;
  if (impl_->backing.contains) return impl_->backing.contains(p);
  if (impl_->generators.empty()) return p.is_identity();
  const auto& els = impl_->materialize();
  return std::binary_search(els.begin(), els.end(), p);
}

bool PermGroup::is_trivial() const { return impl_->generators.empty(); }

bool PermGroup::is_transitive() const {
  std::vector<Point> parent(degree());
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = degree();
  for (const Permutation& g : generators())
    for (Point x = 0; x < degree(); ++x) {
      Point a = find(x), b = find(g[x]);
      if (a != b) {
        parent[a] = b;
        --classes;
      }
    }
  return classes == 1;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree()) return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  if (a.impl_ == b.impl_) return true;
  if (a.order() != b.order()) return false;
  return a.is_subgroup_of(b) && b.is_subgroup_of(a);
}

PermGroup generate_group(std::size_t degree, std::vector<Permutation> generators,
                         const Limits& limits) {
  PermGroup g(degree, std::move(generators), limits);
  (void)g.elements();
  return g;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

namespace {

std::vector<Permutation> all_permutations(std::size_t n,
                                          const std::function<bool(const Permutation&)>& keep) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do {
    Permutation p = PermutationBuilder::adopt(img);
    if (keep(p)) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation cycle_of_length(std::size_t degree, std::size_t len, Point start = 0) {
  Cycle c(len);
  std::iota(c.begin(), c.end(), start);
  return Permutation::from_cycles(degree, {c});
}

}  // namespace

PermGroup trivial_group(std::size_t degree, const Limits& limits) {
  return PermGroup(degree, {},
                   {1, [degree] { return std::vector{Permutation::identity(degree)}; },
                    [](const Permutation& p) { return p.is_identity(); }},
                   limits);
}

PermGroup symmetric_group(std::size_t degree, const Limits& limits) {
  if (degree < 2) throw InvalidArgument("permutation groups need degree >= 2");
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1}})};
  if (degree > 2) gens.push_back(cycle_of_length(degree, degree));
  return PermGroup(
      degree, std::move(gens),
      {factorial(degree),
       [degree] { return all_permutations(degree, [](const Permutation&) { return true; }); },
       [](const Permutation&) { return true; }},
      limits);
}

PermGroup alternating_group(std::size_t degree, const Limits& limits) {
  if (degree < 2) throw InvalidArgument("permutation groups need degree >= 2");
  if (degree == 2) return trivial_group(2, limits);
  std::vector<Permutation> gens;
  for (Point k = 2; k < degree; ++k)
    gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
  return PermGroup(
      degree, std::move(gens),
      {factorial(degree) / 2,
       [degree] {
         return all_permutations(degree, [](const Permutation& p) { return p.is_even(); });
       },
       [](const Permutation& p) { return p.is_even(); }},
      limits);
}

namespace {

// x -> (shift + sign*x) mod n.
bool is_affine_rotation(const Permutation& p, bool allow_reflection) {
  const std::size_t n = p.degree();
  const std::size_t shift = p[0];
  bool rot = true, refl = allow_reflection;
  for (std::size_t x = 0; x < n; ++x) {
    rot = rot && p[x] == (shift + x) % n;
    refl = refl && p[x] == (shift + n - x) % n;
  }
  return rot || refl;
}

}  // namespace

PermGroup cyclic_group(std::size_t degree, const Limits& limits) {
  if (degree < 2) throw InvalidArgument("permutation groups need degree >= 2");
  Permutation r = cycle_of_length(degree, degree);
  return PermGroup(degree, {r},
                   {degree,
                    [r] {
                      std::vector<Permutation> out{Permutation::identity(r.degree())};
                      while (out.size() < r.degree()) out.push_back(compose(out.back(), r));
                      return out;
                    },
                    [](const Permutation& p) { return is_affine_rotation(p, false); }},
                   limits);
}

PermGroup dihedral_group(std::size_t degree, const Limits& limits) {
  if (degree < 3) throw InvalidArgument("dihedral groups need degree >= 3");
  Permutation r = cycle_of_length(degree, degree);
  std::vector<Point> refl(degree);
  for (std::size_t x = 0; x < degree; ++x) refl[x] = static_cast<Point>((degree - x) % degree);
  Permutation s(std::move(refl));
  return PermGroup(degree, {r, s},
                   {2 * degree,
                    [r, s] {
                      std::vector<Permutation> out{Permutation::identity(r.degree())};
                      while (out.size() < r.degree()) out.push_back(compose(out.back(), r));
                      for (std::size_t i = 0, m = out.size(); i < m; ++i)
                        out.push_back(compose(s, out[i]));
                      return out;
                    },
                    [](const Permutation& p) { return is_affine_rotation(p, true); }},
                   limits);
}

PermGroup klein_group(const Limits& limits) {
  return generate_group(4,
                        {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                        limits);
}

bool is_symmetric(const PermGroup& g) {
  return g.order() == factorial(g.degree());
}

bool is_alternating(const PermGroup& g) {
  if (g.degree() < 3) return g.is_trivial() && g.degree() == 2;
  if (g.order() != factorial(g.degree()) / 2) return false;
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [](const Permutation& p) { return p.is_even(); });
}

}  // namespace wreath
