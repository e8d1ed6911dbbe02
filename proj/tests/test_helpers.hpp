#pragma once

#include <random>
#include <vector>

#include "rrcbf/class_k.hpp"

namespace rrcbf::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random class-K function with moderate slopes, mixing the three shapes.
inline ClassKFn random_class_k(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return ClassKFn::linear(uniform(rng, 0.2, 8.0));
    case 1:
      return ClassKFn::power(uniform(rng, 0.2, 5.0), uniform(rng, 0.6, 2.0));
    default: {
      // strictly increasing knots through the origin
      const int per_side = std::uniform_int_distribution<int>(2, 4)(rng);
      std::vector<std::pair<double, double>> knots;
      double s = 0.0, y = 0.0;
      std::vector<std::pair<double, double>> right;
      for (int i = 0; i < per_side; ++i) {
        s += uniform(rng, 0.2, 2.0);
        y += uniform(rng, 0.2, 4.0);
        right.emplace_back(s, y);
      }
      s = 0.0;
      y = 0.0;
      for (int i = 0; i < per_side; ++i) {
        s -= uniform(rng, 0.2, 2.0);
        y -= uniform(rng, 0.2, 4.0);
        knots.emplace_back(s, y);
      }
      std::reverse(knots.begin(), knots.end());
      knots.emplace_back(0.0, 0.0);
      knots.insert(knots.end(), right.begin(), right.end());
      return ClassKFn::monotone_table(std::move(knots));
    }
  }
}

}  // namespace rrcbf::testing
