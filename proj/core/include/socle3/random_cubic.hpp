#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "socle3/polynomial.hpp"

namespace socle3 {

inline constexpr int kCubicCoefficientBound = 9;

// Dense cubic form in n dual variables with integer coefficients drawn uniformly from
// [-bound, bound], redrawn until non-degenerate. Depends only on the generator state, so a
// seed reproduces the same sequence of cubics on every platform.
Polynomial random_cubic(std::size_t n, std::mt19937_64& rng, int bound = kCubicCoefficientBound);

}  // namespace socle3
