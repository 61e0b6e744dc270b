#include "wreath/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "wreath/errors.hpp"

namespace wreath {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidArgument("permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InvalidArgument("images do not form a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidArgument("permutation of degree 0");
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return PermutationBuilder::adopt(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<Cycle>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const Cycle& c : cycles) {
    for (Point x : c) {
      if (x >= degree)
        throw InvalidArgument("cycle point " + std::to_string(x) +
                              " out of range for degree " +
                              std::to_string(degree));
      if (used[x])
        throw InvalidArgument("point " + std::to_string(x) +
                              " appears in more than one cycle position");
      used[x] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.images_[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    Cycle c;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const Cycle& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const Cycle& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("cannot compose permutations of degree " +
                          std::to_string(p.degree()) + " and " +
                          std::to_string(q.degree()));
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) r.images_[x] = q.images_[p.images_[x]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x)
    r.images_[p.images_[x]] = static_cast<Point>(x);
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Point y : p.images()) {
    h ^= y;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wreath
