#pragma once

#include <utility>
#include <vector>

#include "linkcalc/free_word.hpp"

namespace linkcalc {

/// Element of the integral group ring of a free group: a finite formal sum
/// of words with integer coefficients, kept sorted by word with zero
/// coefficients dropped.
using FreeRing = std::vector<std::pair<FreeWord, long long>>;

FreeRing ring_canonical(FreeRing r);
FreeRing ring_add(const FreeRing& a, const FreeRing& b);
FreeRing ring_multiply(const FreeRing& a, const FreeRing& b);

/// Fox derivative with respect to the generator g, characterized by
/// d(x_g) = 1, d(x_g^-1) = -x_g^-1, d(uv) = d(u) + u d(v).
FreeRing fox_derivative(const FreeWord& w, int g);

}  // namespace linkcalc
