#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fpb/basket.hpp"

namespace testing_support {

inline fpb::BasketWord random_word(std::mt19937_64& rng, int n) {
  std::vector<int> letters;
  for (int k = 1; k <= n; ++k) letters.insert(letters.end(), {k, k});
  std::shuffle(letters.begin(), letters.end(), rng);
  return fpb::BasketWord::validate(letters);
}

// Band count uniform in [lo, hi].
inline fpb::BasketWord random_word(std::mt19937_64& rng, int lo, int hi) {
  return random_word(rng, std::uniform_int_distribution<int>(lo, hi)(rng));
}

}  // namespace testing_support
