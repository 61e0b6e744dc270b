#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "wreath/io.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/permutation.hpp"

namespace testing {

inline wreath::Permutation cyc(std::size_t n, const std::string& text) {
  return wreath::parse_permutation(n, text);
}

inline wreath::PermGroup G(const std::string& spec) {
  return wreath::parse_group_spec(spec);
}

inline wreath::Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<wreath::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<wreath::Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return wreath::Permutation(img);
}

/// The catalog groups of degree <= 6 used by the property tests.
inline std::vector<std::string> small_catalog() {
  return {"S2", "I2", "S3", "C3", "I3", "S4", "A4", "C4", "D4", "K4", "I4",
          "S5", "A5", "C5", "D5", "I5", "S6", "A6", "C6", "D6", "I6"};
}

}  // namespace testing
