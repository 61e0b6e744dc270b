#include "wreath/products.hpp"

#include <string>

#include "wreath/errors.hpp"
#include "wreath/orbits.hpp"

namespace wreath {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base)
      throw CapExceeded(std::to_string(base) + "^" + std::to_string(exp) +
                        " points exceed point cap " + std::to_string(cap));
    r *= base;
  }
  return r;
}

std::vector<Point> function_digits(std::size_t index, std::size_t v_size,
                                   std::size_t w_size) {
  std::vector<Point> d(w_size);
  for (std::size_t w = w_size; w-- > 0;) {
    d[w] = static_cast<Point>(index % v_size);
    index /= v_size;
  }
  return d;
}

std::size_t function_index(std::span<const Point> digits, std::size_t v_size) {
  std::size_t idx = 0;
  for (Point x : digits) idx = idx * v_size + x;
  return idx;
}

namespace {

void check_points(std::size_t n, const Limits& limits) {
  if (n > limits.point_cap)
    throw CapExceeded(std::to_string(n) + " points exceed point cap " +
                      std::to_string(limits.point_cap));
}

void check_order(std::uint64_t order, const Limits& limits) {
  if (order > limits.order_cap)
    throw CapExceeded("group too large: order " + std::to_string(order) +
                      " exceeds order cap " + std::to_string(limits.order_cap));
}

// Enumerates every choice of (alpha_0..alpha_{W-1}, beta) and hands the
// assembled permutation to `emit`.
template <class Assemble>
std::vector<Permutation> enumerate_wreath(const PermGroup& a, const PermGroup& b,
                                          Assemble assemble) {
  const auto& as = a.elements();
  const auto& bs = b.elements();
  const std::size_t w = b.degree();
  std::vector<std::size_t> digit(w, 0);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(saturating_pow(as.size(), w) * bs.size()));
  WreathDecomposition d{bs.front(), std::vector<Permutation>(w, as.front())};
  while (true) {
    for (std::size_t i = 0; i < w; ++i) d.alphas[i] = as[digit[i]];
    for (const Permutation& beta : bs) {
      d.beta = beta;
      out.push_back(assemble(d));
    }
    std::size_t i = 0;
    while (i < w && ++digit[i] == as.size()) digit[i++] = 0;
    if (i == w) break;
  }
  return out;
}

bool certificate_in(const std::optional<WreathDecomposition>& d, const PermGroup& a,
                    const PermGroup& b) {
  if (!d || !b.contains(d->beta)) return false;
  for (const Permutation& alpha : d->alphas)
    if (!a.contains(alpha)) return false;
  return true;
}

WreathDecomposition trivial_certificate(std::size_t v, std::size_t w) {
  return {Permutation::identity(w), std::vector<Permutation>(w, Permutation::identity(v))};
}

}  // namespace

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t nv = a.degree(), nw = b.degree(), n = nv * nw;
  const Limits& limits = a.limits();
  check_points(n, limits);
  auto pair = [nv, nw, n](const Permutation& alpha, const Permutation& beta) {
    std::vector<Point> img(n);
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t w = 0; w < nw; ++w) img[v * nw + w] = static_cast<Point>(alpha[v] * nw + beta[w]);
    return PermutationBuilder::adopt(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(pair(g, Permutation::identity(nw)));
  for (const auto& g : b.generators()) gens.push_back(pair(Permutation::identity(nv), g));
  PermGroup::Backing backing;
  backing.order = saturating_mul(a.order(), b.order());
  backing.enumerate = [a, b, pair] {
    std::vector<Permutation> out;
    for (const auto& x : a.elements())
      for (const auto& y : b.elements()) out.push_back(pair(x, y));
    return out;
  };
  backing.contains = [a, b, pair, nv, nw](const Permutation& p) {
    std::vector<Point> alpha(nv), beta(nw);
    for (std::size_t v = 0; v < nv; ++v) alpha[v] = static_cast<Point>(p[v * nw] / nw);
    for (std::size_t w = 0; w < nw; ++w) beta[w] = static_cast<Point>(p[w] % nw);
    try {
      Permutation pa(alpha), pb(beta);
      return pair(pa, pb) == p && a.contains(pa) && b.contains(pb);
    } catch (const InvalidArgument&) {
      return false;
    }
  };
  return PermGroup(n, std::move(gens), std::move(backing), limits);
}

PermGroup parallel_multiple(const PermGroup& b, std::size_t t) {
  if (t == 0) throw InvalidArgument("parallel multiple needs t >= 1");
  if (t == 1) return b;
  const std::size_t nw = b.degree(), n = nw * t;
  check_points(n, b.limits());
  auto lift = [nw, t, n](const Permutation& beta) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t w = 0; w < nw; ++w) img[i * nw + w] = static_cast<Point>(i * nw + beta[w]);
    return PermutationBuilder::adopt(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& g : b.generators()) gens.push_back(lift(g));
  PermGroup::Backing backing;
  backing.order = b.order();
  backing.enumerate = [b, lift] {
    std::vector<Permutation> out;
    for (const auto& x : b.elements()) out.push_back(lift(x));
    return out;
  };
  backing.contains = [b, lift, nw](const Permutation& p) {
    std::vector<Point> beta(nw);
    for (std::size_t w = 0; w < nw; ++w) {
      if (p[w] >= nw) return false;
      beta[w] = p[w];
    }
    Permutation pb = PermutationBuilder::adopt(std::move(beta));
    return lift(pb) == p && b.contains(pb);
  };
  return PermGroup(n, std::move(gens), std::move(backing), b.limits());
}

Permutation assemble_imprimitive(const WreathDecomposition& d) {
  const std::size_t nw = d.beta.degree();
  if (d.alphas.size() != nw) throw InvalidArgument("one fibre permutation per base point required");
  const std::size_t nv = d.alphas.front().degree();
  std::vector<Point> img(nv * nw);
  for (std::size_t w = 0; w < nw; ++w) {
    if (d.alphas[w].degree() != nv) throw InvalidArgument("fibre permutations differ in degree");
    for (std::size_t v = 0; v < nv; ++v)
      img[v * nw + w] = static_cast<Point>(d.alphas[w][v] * nw + d.beta[w]);
  }
  return PermutationBuilder::adopt(std::move(img));
}

Permutation assemble_product_action(const WreathDecomposition& d) {
  const std::size_t nw = d.beta.degree();
  if (d.alphas.size() != nw) throw InvalidArgument("one fibre permutation per base point required");
  const std::size_t nv = d.alphas.front().degree();
  const std::size_t n = checked_power(nv, nw, SIZE_MAX);
  std::vector<Point> img(n);
  std::vector<Point> f(nw, 0), g(nw);
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::size_t w = 0; w < nw; ++w) g[w] = d.alphas[w][f[d.beta[w]]];
    img[idx] = static_cast<Point>(function_index(g, nv));
    // advance f as a base-nv numeral, last coordinate least significant
    for (std::size_t w = nw; w-- > 0;) {
      if (++f[w] < nv) break;
      f[w] = 0;
    }
  }
  return PermutationBuilder::adopt(std::move(img));
}

std::optional<WreathDecomposition> decompose_imprimitive(const Permutation& phi,
                                                         std::size_t nv, std::size_t nw) {
  if (phi.degree() != nv * nw) throw InvalidArgument("degree is not |V|*|W|");
  std::vector<Point> beta(nw);
  std::vector<Permutation> alphas;
  alphas.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    beta[w] = static_cast<Point>(phi[w] % nw);
    std::vector<Point> alpha(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      Point y = phi[static_cast<Point>(v * nw + w)];
      if (y % nw != beta[w]) return std::nullopt;
      alpha[v] = static_cast<Point>(y / nw);
    }
    alphas.push_back(PermutationBuilder::adopt(std::move(alpha)));
  }
  // phi is a bijection mapping each fibre into one fibre, so beta and every
  // alpha are bijections as well.
  return WreathDecomposition{PermutationBuilder::adopt(std::move(beta)), std::move(alphas)};
}

std::optional<WreathDecomposition> decompose_product_action(const Permutation& phi,
                                                            std::size_t nv, std::size_t nw) {
  const std::size_t n = checked_power(nv, nw, SIZE_MAX);
  if (phi.degree() != n) throw InvalidArgument("degree is not |V|^|W|");
  // The zero function c and the functions differing from c at exactly one
  // coordinate u determine the certificate: their images differ from the
  // image of c at exactly the coordinate w with w beta = u.
  const std::vector<Point> base = function_digits(phi[0], nv, nw);
  std::vector<std::vector<Point>> alpha(nw, std::vector<Point>(nv));
  std::vector<Point> beta(nw);
  std::vector<bool> beta_hit(nw, false);
  std::vector<Point> f(nw, 0);
  for (std::size_t u = 0; u < nw; ++u) {
    std::optional<std::size_t> target;
    for (Point x = 1; x < nv; ++x) {
      f[u] = x;
      const auto img = function_digits(phi[static_cast<Point>(function_index(f, nv))], nv, nw);
      f[u] = 0;
      std::optional<std::size_t> diff;
      for (std::size_t w = 0; w < nw; ++w) {
        if (img[w] == base[w]) continue;
        if (diff) return std::nullopt;
        diff = w;
      }
      if (!diff || (target && *target != *diff)) return std::nullopt;
      target = diff;
      alpha[*diff][x] = img[*diff];
    }
    if (beta_hit[*target]) return std::nullopt;
    beta_hit[*target] = true;
    beta[*target] = static_cast<Point>(u);
    alpha[*target][0] = base[*target];
  }
  WreathDecomposition d{Permutation::identity(nw), {}};
  try {
    d.beta = Permutation(std::move(beta));
    for (auto& a : alpha) d.alphas.emplace_back(std::move(a));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  if (assemble_product_action(d) != phi) return std::nullopt;
  return d;
}

PermGroup wreath_imprimitive(const PermGroup& a, const PermGroup& b) {
  const std::size_t nv = a.degree(), nw = b.degree(), n = nv * nw;
  const Limits& limits = a.limits();
  check_points(n, limits);
  const std::uint64_t order = saturating_mul(saturating_pow(a.order(), nw), b.order());
  std::vector<Permutation> gens;
  // One copy of A's generators per B-orbit; B moves them to the other fibres.
  for (const auto& orbit : orbits(b).classes)
    for (const auto& g : a.generators()) {
      auto d = trivial_certificate(nv, nw);
      d.alphas[orbit.front()] = g;
      gens.push_back(assemble_imprimitive(d));
    }
  for (const auto& g : b.generators()) {
    auto d = trivial_certificate(nv, nw);
    d.beta = g;
    gens.push_back(assemble_imprimitive(d));
  }
  PermGroup::Backing backing;
  backing.order = order;
  backing.enumerate = [a, b, order, limits] {
    check_order(order, limits);
    return enumerate_wreath(a, b, assemble_imprimitive);
  };
  backing.contains = [a, b, nv, nw](const Permutation& p) {
    return certificate_in(decompose_imprimitive(p, nv, nw), a, b);
  };
  return PermGroup(n, std::move(gens), std::move(backing), limits);
}

PermGroup wreath_product_action(const PermGroup& a, const PermGroup& b) {
  const std::size_t nv = a.degree(), nw = b.degree();
  const Limits& limits = a.limits();
  const std::size_t n = checked_power(nv, nw, limits.point_cap);
  const std::uint64_t order = saturating_mul(saturating_pow(a.order(), nw), b.order());
  std::vector<Permutation> gens;
  // One copy of A's generators per B-orbit; B moves them to the other fibres.
  for (const auto& orbit : orbits(b).classes)
    for (const auto& g : a.generators()) {
      auto d = trivial_certificate(nv, nw);
      d.alphas[orbit.front()] = g;
      gens.push_back(assemble_product_action(d));
    }
  for (const auto& g : b.generators()) {
    auto d = trivial_certificate(nv, nw);
    d.beta = g;
    gens.push_back(assemble_product_action(d));
  }
  PermGroup::Backing backing;
  backing.order = order;
  backing.enumerate = [a, b, order, limits] {
    check_order(order, limits);
    return enumerate_wreath(a, b, assemble_product_action);
  };
  backing.contains = [a, b, nv, nw](const Permutation& p) {
    return certificate_in(decompose_product_action(p, nv, nw), a, b);
  };
  return PermGroup(n, std::move(gens), std::move(backing), limits);
}

}  // namespace wreath
