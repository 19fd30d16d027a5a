#include "linkcalc/fox.hpp"

#include <algorithm>
#include <cmath>

namespace linkcalc {

FreeRing ring_canonical(FreeRing r) {
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FreeRing out;
  for (auto& [w, c] : r) {
    if (!out.empty() && out.back().first == w)
      out.back().second += c;
    else
      out.emplace_back(std::move(w), c);
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

FreeRing ring_add(const FreeRing& a, const FreeRing& b) {
  FreeRing r = a;
  r.insert(r.end(), b.begin(), b.end());
  return ring_canonical(std::move(r));
}

FreeRing ring_multiply(const FreeRing& a, const FreeRing& b) {
  FreeRing r;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) r.emplace_back(u * v, cu * cv);
  return ring_canonical(std::move(r));
}

FreeRing fox_derivative(const FreeWord& w, int g) {
  FreeRing r;
  FreeWord prefix;
  for (int letter : w.letters()) {
    FreeWord next = prefix * FreeWord::generator(letter > 0 ? letter : -letter,
                                                 letter > 0 ? 1 : -1);
    // d(x) contributes the prefix, d(x^-1) minus the prefix extended by x^-1.
    if (letter == g) r.emplace_back(prefix, 1);
    if (letter == -g) r.emplace_back(next, -1);
    prefix = std::move(next);
  }
  return ring_canonical(std::move(r));
}

}  // namespace linkcalc
