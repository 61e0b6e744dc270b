#include "wreath/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <string>

#include "wreath/errors.hpp"

namespace wreath {

namespace {

constexpr Point kUnassigned = static_cast<Point>(-1);

// Domains of all vertices as one flat bitset array: vertex x owns words
// [x*words, (x+1)*words).
using Domains = std::vector<std::uint64_t>;

class Backtracker {
 public:
  Backtracker(const MappingProblem& problem, const Limits& limits)
      : src_(*problem.source),
        dst_(*problem.target),
        extra_(problem.extra),
        n_(src_.n),
        words_((n_ + 63) / 64),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {
    if (dst_.n != n_) throw InvalidArgument("source and target sizes differ");
    image_.assign(n_, kUnassigned);
    initial_ = initial_domains();
  }

  const Domains& initial() const { return initial_; }

  // Applies x -> y on top of `cur`, writing the propagated domains to
  // `next`. Returns false when some domain empties or `extra` rejects.
  bool assign(const Domains& cur, Domains& next, Point x, Point y) {
    if (!test(cur, x, y)) return false;
    tick();
    image_[x] = y;
    from_.push_back(x);
    to_.push_back(y);
    if (extra_ && !extra_(from_, to_)) {
      undo();
      return false;
    }
    next = cur;
    for (Point z = 0; z < n_; ++z) {
      std::uint64_t* dz = &next[z * words_];
      if (z == x) {
        std::fill(dz, dz + words_, 0);
        set(dz, y);
        continue;
      }
      if (image_[z] != kUnassigned) continue;
      const Color fwd = src_(x, z), back = src_(z, x);
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = dz[w];
        while (bits) {
          const int b = std::countr_zero(bits);
          bits &= bits - 1;
          const Point u = static_cast<Point>(w * 64 + b);
          if (u == y || dst_(y, u) != fwd || dst_(u, y) != back) dz[w] &= ~(std::uint64_t{1} << b);
        }
        any = any || dz[w] != 0;
      }
      if (!any) {
        undo();
        return false;
      }
    }
    return true;
  }

  void undo() {
    image_[from_.back()] = kUnassigned;
    from_.pop_back();
    to_.pop_back();
  }

  // Completes the current partial map; on success the full map is left in
  // image_ and true is returned.
  bool extend(const Domains& cur) {
    if (from_.size() == n_) return true;
    Point best = kUnassigned;
    std::size_t best_size = SIZE_MAX;
    for (Point z = 0; z < n_; ++z) {
      if (image_[z] != kUnassigned) continue;
      std::size_t s = popcount(&cur[z * words_]);
      if (s < best_size) {
        best = z;
        best_size = s;
        if (s == 1) break;
      }
    }
    Domains next;
    const std::uint64_t* db = &cur[best * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = db[w];
      while (bits) {
        const Point u = static_cast<Point>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (!assign(cur, next, best, u)) continue;
        if (extend(next)) return true;
        undo();
      }
    }
    return false;
  }

  Permutation current_map() const { return Permutation(image_); }

  std::vector<Point> domain_of(const Domains& d, Point x) const {
    std::vector<Point> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = d[x * words_ + w];
      while (bits) {
        out.push_back(static_cast<Point>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Records x -> y without propagation; the caller supplies domains that
  // already account for it.
  void push_fixed(Point x, Point y) {
    image_[x] = y;
    from_.push_back(x);
    to_.push_back(y);
  }

  void reset() {
    for (Point x : from_) image_[x] = kUnassigned;
    from_.clear();
    to_.clear();
  }

 private:
  static void set(std::uint64_t* d, Point y) { d[y / 64] |= std::uint64_t{1} << (y % 64); }

  bool test(const Domains& d, Point x, Point y) const {
    return (d[x * words_ + y / 64] >> (y % 64)) & 1;
  }

  std::size_t popcount(const std::uint64_t* d) const {
    std::size_t s = 0;
    for (std::size_t w = 0; w < words_; ++w) s += std::popcount(d[w]);
    return s;
  }

  void tick() {
    if (++nodes_ % 1024 != 0 || limits_.timeout.count() == 0) return;
    if (std::chrono::steady_clock::now() - start_ > limits_.timeout)
      throw SearchTimeout("backtracking search exceeded " +
                          std::to_string(limits_.timeout.count()) + " ms");
  }

  // Vertex classes by color and by the multiset of (out, in) colors to the
  // other vertices; only equal classes may correspond.
  Domains initial_domains() const {
    using Signature = std::pair<Color, std::vector<std::pair<Color, Color>>>;
    auto signature = [this](const PairColoring& c, Point x) {
      Signature s{c(x, x), {}};
      s.second.reserve(n_ - 1);
      for (Point z = 0; z < n_; ++z)
        if (z != x) s.second.emplace_back(c(x, z), c(z, x));
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> src_id(n_), dst_id(n_);
    for (Point x = 0; x < n_; ++x)
      src_id[x] = ids.try_emplace(signature(src_, x), ids.size()).first->second;
    for (Point y = 0; y < n_; ++y) {
      auto it = ids.find(signature(dst_, y));
      dst_id[y] = it == ids.end() ? SIZE_MAX : it->second;
    }
    Domains d(n_ * words_, 0);
    for (Point x = 0; x < n_; ++x)
      for (Point y = 0; y < n_; ++y)
        if (src_id[x] == dst_id[y]) set(&d[x * words_], y);
    return d;
  }

  const PairColoring& src_;
  const PairColoring& dst_;
  const ExtensionCheck& extra_;
  std::size_t n_;
  std::size_t words_;
  Limits limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  std::vector<Point> image_;
  std::vector<Point> from_, to_;
  Domains initial_;
};

void check_size(std::size_t n, const Limits& limits) {
  if (n < 1) throw InvalidArgument("empty structure");
  if (n > limits.graph_cap)
    throw CapExceeded(std::to_string(n) + " vertices exceed the search cap " +
                      std::to_string(limits.graph_cap));
}

// Orbit of x under `gens` with one transversal element per orbit point.
std::vector<std::optional<Permutation>> schreier_orbit(Point x, std::size_t n,
                                                       const std::vector<Permutation>& gens) {
  std::vector<std::optional<Permutation>> t(n);
  t[x] = Permutation::identity(n);
  std::vector<Point> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point y = queue[head];
    for (const Permutation& g : gens) {
      const Point z = g[y];
      if (!t[z]) {
        t[z] = compose(*t[y], g);
        queue.push_back(z);
      }
    }
  }
  return t;
}

}  // namespace

std::optional<Permutation> find_mapping(const MappingProblem& problem,
                                        std::span<const std::pair<Point, Point>> forced,
                                        const Limits& limits) {
  check_size(problem.source->n, limits);
  Backtracker bt(problem, limits);
  std::vector<Domains> states{bt.initial()};
  for (auto [x, y] : forced) {
    Domains next;
    if (!bt.assign(states.back(), next, x, y)) return std::nullopt;
    states.push_back(std::move(next));
  }
  if (!bt.extend(states.back())) return std::nullopt;
  return bt.current_map();
}

AutChain automorphism_chain(const PairColoring& coloring, const ExtensionCheck& extra,
                            const Limits& limits) {
  const std::size_t n = coloring.n;
  check_size(n, limits);
  MappingProblem problem{&coloring, &coloring, extra};
  Backtracker bt(problem, limits);

  // prefix[i]: domains after fixing 0..i-1 pointwise.
  std::vector<Domains> prefix{bt.initial()};
  for (Point i = 0; i + 1 < n; ++i) {
    Domains next;
    if (!bt.assign(prefix.back(), next, i, i))
      throw Error("identity rejected by the search constraints");
    prefix.push_back(std::move(next));
  }
  bt.reset();

  AutChain chain;
  chain.degree_ = n;
  std::vector<AutChain::Level> levels;
  for (std::size_t level = n; level-- > 0;) {
    const Point base = static_cast<Point>(level);
    auto orbit = schreier_orbit(base, n, chain.generators_);
    std::vector<bool> excluded(n, false);
    for (Point y : bt.domain_of(prefix[level], base)) {
      if (orbit[y] || excluded[y]) continue;
      for (Point j = 0; j < base; ++j) bt.push_fixed(j, j);
      Domains next;
      std::optional<Permutation> found;
      if (bt.assign(prefix[level], next, base, y) && bt.extend(next)) found = bt.current_map();
      bt.reset();
      if (found) {
        chain.generators_.push_back(std::move(*found));
        orbit = schreier_orbit(base, n, chain.generators_);
      } else {
        const auto lost = schreier_orbit(y, n, chain.generators_);
        for (Point z = 0; z < n; ++z)
          if (lost[z]) excluded[z] = true;
      }
    }
    AutChain::Level lv{base, {}};
    for (Point y = 0; y < n; ++y)
      if (orbit[y]) lv.transversal.emplace_back(y, std::move(*orbit[y]));
    if (lv.transversal.size() > 1) {
      chain.order_ = saturating_mul(chain.order_, lv.transversal.size());
      levels.push_back(std::move(lv));
    }
  }
  std::reverse(levels.begin(), levels.end());
  chain.levels_ = std::move(levels);
  return chain;
}

bool AutChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation g = p;
  for (const Level& lv : levels_) {
    const Point y = g[lv.base];
    auto it = std::find_if(lv.transversal.begin(), lv.transversal.end(),
                           [y](const auto& e) { return e.first == y; });
    if (it == lv.transversal.end()) return false;
    g = compose(g, inverse(it->second));
  }
  return g.is_identity();
}

std::vector<Permutation> AutChain::enumerate() const {
  std::vector<Permutation> out;
  // Every element factors uniquely as t_k ... t_1 t_0 (t_k applied first),
  // t_i drawn from the transversal of level i.
  std::function<void(std::size_t, const Permutation&)> rec =
      [&](std::size_t level, const Permutation& suffix) {
        if (level == levels_.size()) {
          out.push_back(suffix);
          return;
        }
        for (const auto& [y, t] : levels_[level].transversal) rec(level + 1, compose(t, suffix));
      };
  rec(0, Permutation::identity(degree_));
  return out;
}

PermGroup AutChain::to_group(const Limits& limits) const {
  auto self = std::make_shared<const AutChain>(*this);
  PermGroup::Backing backing;
  backing.order = order_;
  backing.enumerate = [self] { return self->enumerate(); };
  backing.contains = [self](const Permutation& p) { return self->contains(p); };
  return PermGroup(degree_, generators_, std::move(backing), limits);
}

}  // namespace wreath
