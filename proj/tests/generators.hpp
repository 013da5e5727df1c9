#pragma once

#include "pavoid/morphisms.hpp"

#include <random>
#include <string>
#include <vector>

namespace testgen {

// Uniform endomorphisms on 2..4 letters with 1 <= n <= 8. Half are random
// images; the other half start from a Thue-Morse power or a catalog morphism
// truncated to n letters and get one or two letters flipped, which keeps a
// useful share of them close to satisfying the triple condition.
inline std::vector<pavoid::Morphism> mutated_morphisms(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  const std::vector<std::vector<std::string>> bases{
      {"01", "10"},
      {"0110", "1001"},
      {"01101001", "10010110"},
      {"012", "120", "201"},
      {"0121", "1202", "2010"},
      {"01210212", "12021020", "20102101"},
      {"0123", "1230", "2301", "3012"},
      {"01231230", "12302301", "23013012", "30120123"},
  };
  std::vector<pavoid::Morphism> out;
  while (out.size() < count) {
    std::vector<std::string> images;
    if (out.size() % 2 == 0) {
      const std::size_t k = 2 + rng() % 3;
      const std::size_t n = 1 + rng() % 8;
      images.assign(k, std::string(n, '0'));
      for (auto& img : images) {
        for (auto& c : img) c = static_cast<char>('0' + rng() % k);
      }
    } else {
      images = bases[rng() % bases.size()];
      const std::size_t k = images.size();
      const int flips = 1 + static_cast<int>(rng() % 2);
      for (int f = 0; f < flips; ++f) {
        auto& img = images[rng() % k];
        img[rng() % img.size()] = static_cast<char>('0' + rng() % k);
      }
    }
    const std::string letters = std::string("0123").substr(0, images.size());
    out.push_back(pavoid::Morphism::from_strings(letters, letters, images));
  }
  return out;
}

}  // namespace testgen
